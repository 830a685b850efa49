#include "ccomp/cotangent.hpp"

#include "ccomp/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ccomp {

Prec cot_working_precision(std::size_t max_digits, Prec input_prec) {
    constexpr Prec kCap = Prec(1) << 22;
    Prec want = max_digits >= 18 ? kCap : std::min<Prec>(kCap, Prec(16) << max_digits);
    return std::max({Prec(256), want, input_prec});
}

namespace {

// f(x) = (a x + 1) / (x - a), decreasing in x for x > a, rounded in `dir`.
// Returns true when every operation was exact.
bool digit_map(mpfr_t out, mpfr_srcptr x, const mpz_class& a, mpfr_rnd_t dir, Prec prec) {
    mpfr_rnd_t opposite = dir == MPFR_RNDU ? MPFR_RNDD : MPFR_RNDU;
    mpfr_t num, den;
    mpfr_init2(num, prec);
    mpfr_init2(den, prec);
    int t1 = mpfr_mul_z(num, x, a.get_mpz_t(), dir);
    int t2 = mpfr_add_ui(num, num, 1, dir);
    int t3 = mpfr_sub_z(den, x, a.get_mpz_t(), opposite);
    int t4 = mpfr_div(out, num, den, dir);
    mpfr_clear(num);
    mpfr_clear(den);
    return t1 == 0 && t2 == 0 && t3 == 0 && t4 == 0;
}

}  // namespace

CotangentDigits cot_encode(const Real& x, std::size_t max_digits) {
    if (!x.is_finite() || !(x > 0.0)) throw DomainError("continued cotangent expansion needs x > 0");
    if (max_digits == 0) throw DomainError("max_digits must be at least 1");
    const Prec prec = cot_working_precision(max_digits, x.prec());
    Real lo(x, prec), hi(x, prec);
    bool exact = true;
    CotangentDigits out;
    for (std::size_t k = 0; k < max_digits; ++k) {
        mpz_class a_lo, a_hi;
        mpfr_get_z(a_lo.get_mpz_t(), lo.raw(), MPFR_RNDD);
        mpfr_get_z(a_hi.get_mpz_t(), hi.raw(), MPFR_RNDD);
        if (a_lo != a_hi)
            throw PrecisionExhausted("digit " + std::to_string(k) + " is not determined at " + std::to_string(prec) +
                                     " bits");
        if (lo.is_integer()) {
            if (exact) {
                out.digits.push_back(a_lo);
                out.terminated = true;
                out.residual = Real::inf(prec);
                return out;
            }
            throw PrecisionExhausted("x_" + std::to_string(k) + " may equal its integer part");
        }
        out.digits.push_back(a_lo);
        Real nlo(prec), nhi(prec);
        bool e1 = digit_map(nlo.raw(), hi.raw(), a_lo, MPFR_RNDD, prec);
        bool e2 = digit_map(nhi.raw(), lo.raw(), a_lo, MPFR_RNDU, prec);
        exact = exact && e1 && e2;
        lo = std::move(nlo);
        hi = std::move(nhi);
    }
    out.residual = lo;
    return out;
}

CotangentValue cot_decode_both(const CotangentDigits& d, std::size_t depth, Prec prec) {
    if (depth == 0 || depth > d.digits.size()) throw DomainError("depth must lie in [1, digit count]");
    std::size_t bits = 0;
    for (std::size_t k = 0; k < depth; ++k) {
        if (d.digits[k] < 0) throw DomainError("continued cotangent digits must be nonnegative");
        bits = std::max(bits, mpz_sizeinbase(d.digits[k].get_mpz_t(), 2));
    }
    const Prec work = std::max<Prec>(prec, 2 * static_cast<Prec>(bits) + 64);
    Real x(d.digits[depth - 1], work);
    for (std::size_t k = depth - 1; k-- > 0;) {
        Real a(d.digits[k], work);
        Real den = x - a;
        if (den.is_zero()) throw DomainError("cotangent pole at level " + std::to_string(k));
        x = (a * x + 1L) / den;
    }
    Real theta(work);
    const Real half_pi = Real::pi(work) / 2L;
    for (std::size_t k = 0; k < depth; ++k) {
        Real a(d.digits[k], work);
        Real t = a.is_zero() ? half_pi : atan(Real(1L, work) / a);
        if (k % 2) theta -= t;
        else theta += t;
    }
    Real c = cos(theta) / sin(theta);
    return {Real(x, prec), Real(c, prec)};
}

Real cot_decode(const CotangentDigits& d, std::size_t depth, Prec prec) {
    return cot_decode_both(d, depth, prec).value;
}

std::vector<mpz_class> lehmer_digits(std::size_t n) {
    std::vector<mpz_class> out;
    mpz_class a = 0;
    for (std::size_t k = 0; k < n; ++k) {
        out.push_back(a);
        a = a * a + a + 1;
    }
    return out;
}

Real lehmer_constant(std::size_t n_digits, Prec prec) {
    if (n_digits < 4) throw DomainError("n_digits must be at least 4");
    CotangentDigits d;
    d.digits = lehmer_digits(n_digits);
    return cot_decode(d, n_digits, prec);
}

bool check_regular(const std::vector<mpz_class>& digits) {
    for (std::size_t k = 0; k + 1 < digits.size(); ++k) {
        const mpz_class& a = digits[k];
        if (digits[k + 1] < a * a + a + 1) return false;
    }
    return true;
}

bool check_regular(const CotangentDigits& d) { return check_regular(d.digits); }

std::string dump_digits(const std::vector<mpz_class>& digits, const Real* residual, bool terminated) {
    std::ostringstream os;
    for (const auto& a : digits) os << a.get_str() << '\n';
    if (terminated) os << "terminated\n";
    else if (residual) os << "residual " << residual->str(30) << '\n';
    return os.str();
}

}  // namespace ccomp
