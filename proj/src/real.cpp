#include "ccomp/real.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ccomp {

namespace {

std::atomic<Prec> g_default{kDefaultPrecision};

// Doubly exponential term streams need the widest exponent range MPFR offers.
void widen_exponent_range() {
    thread_local bool done = false;
    if (!done) {
        mpfr_set_emax(mpfr_get_emax_max());
        mpfr_set_emin(mpfr_get_emin_min());
        done = true;
    }
}

Prec clamp_prec(Prec p) {
    if (p < MPFR_PREC_MIN) return MPFR_PREC_MIN;
    if (p > MPFR_PREC_MAX) return MPFR_PREC_MAX;
    return p;
}

Prec wider(const Real& a, const Real& b) { return a.prec() > b.prec() ? a.prec() : b.prec(); }

}  // namespace

Prec default_precision() { return g_default.load(); }

void set_default_precision(Prec bits) {
    if (bits < kMinPrecision) throw std::invalid_argument("precision below 53 bits");
    g_default.store(bits);
}

Real::Real() : Real(default_precision()) {}

Real::Real(Prec prec) {
    widen_exponent_range();
    mpfr_init2(v_, clamp_prec(prec));
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, Prec prec) : Real(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(long v, Prec prec) : Real(prec) { mpfr_set_si(v_, v, MPFR_RNDN); }

Real::Real(std::string_view decimal, Prec prec) : Real(prec) {
    std::string s(decimal);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: " + s);
}

Real::Real(const mpz_class& z, Prec prec) : Real(prec) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

Real::Real(const Real& other) : Real(other.prec()) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(const Real& other, Prec prec) : Real(prec) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(Real&& other) noexcept : Real(other.prec()) { mpfr_swap(v_, other.v_); }

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.prec());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::inf(Prec prec, int sign) {
    Real r(prec);
    mpfr_set_inf(r.v_, sign < 0 ? -1 : 1);
    return r;
}

Real Real::pi(Prec prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::ln2(Prec prec) {
    Real r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    return r;
}

mpz_class Real::to_mpz() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDZ);
    return z;
}

std::string Real::str(int digits) const {
    if (is_nan()) return "nan";
    if (is_inf()) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    std::size_t n = digits > 0 ? static_cast<std::size_t>(digits)
                               : mpfr_get_str_ndigits(10, prec());
    mpfr_exp_t e = 0;
    char* raw = mpfr_get_str(nullptr, &e, 10, n, v_, MPFR_RNDN);
    std::string m(raw);
    mpfr_free_str(raw);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m.erase(0, 1);
    while (m.size() > 1 && m.back() == '0') m.pop_back();
    std::string out;
    long exp10 = static_cast<long>(e);
    if (exp10 > 0 && exp10 <= 40) {
        if (static_cast<long>(m.size()) <= exp10) {
            out = m + std::string(static_cast<std::size_t>(exp10) - m.size(), '0');
        } else {
            out = m.substr(0, static_cast<std::size_t>(exp10)) + "." +
                  m.substr(static_cast<std::size_t>(exp10));
        }
    } else if (exp10 <= 0 && exp10 > -10) {
        out = "0." + std::string(static_cast<std::size_t>(-exp10), '0') + m;
    } else {
        out = m.substr(0, 1);
        if (m.size() > 1) out += "." + m.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    return neg ? "-" + out : out;
}

Real& Real::operator+=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

#define BINOP(op, fn)                                        \
    Real operator op(const Real& a, const Real& b) {         \
        Real r(wider(a, b));                                 \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);            \
        return r;                                            \
    }
BINOP(+, mpfr_add)
BINOP(-, mpfr_sub)
BINOP(*, mpfr_mul)
BINOP(/, mpfr_div)
#undef BINOP

Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}

Real operator+(long a, const Real& b) { return b + a; }

Real operator-(const Real& a, long b) {
    Real r(a.prec());
    mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator-(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, long b) {
    Real r(a.prec());
    mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
    return r;
}
Real operator/(long a, const Real& b) {
    Real r(b.prec());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
int cmp(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b); }

#define UNARY(name, fn)                          \
    Real name(const Real& x) {                   \
        Real r(x.prec());                        \
        fn(r.raw(), x.raw(), MPFR_RNDN);         \
        return r;                                \
    }
UNARY(abs, mpfr_abs)
UNARY(sqrt, mpfr_sqrt)
UNARY(cbrt, mpfr_cbrt)
UNARY(exp, mpfr_exp)
UNARY(log, mpfr_log)
UNARY(log1p, mpfr_log1p)
UNARY(sin, mpfr_sin)
UNARY(cos, mpfr_cos)
UNARY(tan, mpfr_tan)
UNARY(asin, mpfr_asin)
UNARY(acos, mpfr_acos)
UNARY(atan, mpfr_atan)
#undef UNARY

Real floor(const Real& x) {
    Real r(x.prec());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real rootn(const Real& x, unsigned long k) {
    Real r(x.prec());
    mpfr_rootn_ui(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(wider(x, y));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long k) {
    Real r(x.prec());
    mpfr_pow_si(r.raw(), x.raw(), k, MPFR_RNDN);
    return r;
}

Real ldexp(const Real& x, long e) {
    Real r(x.prec());
    mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

}  // namespace ccomp
