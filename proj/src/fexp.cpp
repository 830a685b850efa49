#include "ccomp/fexp.hpp"

#include "ccomp/errors.hpp"

namespace ccomp {

bool FExpansionSystem::in_domain(const Real& x) const {
    if (!x.is_finite()) return false;
    if (direction == FDirection::Increasing) return x >= domain_lo && x < domain_hi;
    return x > domain_lo && x <= domain_hi;
}

FExpansionSystem FExpansionSystem::reciprocal() {
    FExpansionSystem s;
    s.name = "reciprocal";
    s.direction = FDirection::Decreasing;
    s.f = [](const Real& t) { return Real(1L, t.prec()) / t; };
    s.f_inverse = [](const Real& x) { return Real(1L, x.prec()) / x; };
    s.domain_lo = Real(0L, kMinPrecision);
    s.domain_hi = Real(1L, kMinPrecision);
    return s;
}

FExpansionSystem FExpansionSystem::radix(long p) {
    if (p < 2) throw DomainError("radix must be at least 2");
    FExpansionSystem s;
    s.name = "radix" + std::to_string(p);
    s.direction = FDirection::Increasing;
    s.f = [p](const Real& t) { return t / p; };
    s.f_inverse = [p](const Real& x) { return x * p; };
    s.domain_lo = Real(0L, kMinPrecision);
    s.domain_hi = Real(1L, kMinPrecision);
    s.digit_max = p - 1;
    return s;
}

namespace {

// Integer part of y, snapping to the integer above when y falls short of it
// by less than 2^(-prec/2) relative.
mpz_class snapped_floor(const Real& y, bool& snapped) {
    const Prec prec = y.prec();
    Real fl = floor(y);
    Real up = fl + 1L;
    Real tol = ldexp(max(Real(1L, prec), abs(y)), -static_cast<long>(prec / 2));
    snapped = false;
    if (up - y <= tol) {
        snapped = true;
        return up.to_mpz();
    }
    if (y - fl <= tol) snapped = true;
    return fl.to_mpz();
}

void check_digit_range(const Real& y) {
    if (abs(y) > ldexp(Real(1L, y.prec()), static_cast<long>(y.prec()) - 8))
        throw DigitOverflow("digit exceeds the working-precision integer range");
}

}  // namespace

FDigits f_encode(const FExpansionSystem& sys, const Real& x_in, std::size_t n) {
    if (n == 0) throw DomainError("n must be at least 1");
    if (!sys.in_domain(x_in)) throw DomainError("x outside the system domain");
    const Prec prec = std::max<Prec>(x_in.prec(), kDefaultPrecision);
    Real x(x_in, prec);
    FDigits out;
    for (std::size_t i = 0; i < n; ++i) {
        Real y = sys.f_inverse(x);
        if (!y.is_finite()) throw DomainError("f_inverse undefined at residual");
        check_digit_range(y);
        bool snapped = false;
        mpz_class a = snapped_floor(y, snapped);
        if (sys.digit_max && a > *sys.digit_max) a = *sys.digit_max;
        if (a < 0) a = 0;
        out.digits.push_back(a);
        x = snapped ? Real(prec) : y - Real(a, prec);
        if (x.sign() < 0) x = Real(prec);
        if (x.is_zero() && sys.direction == FDirection::Decreasing) {
            out.terminated = true;
            break;
        }
    }
    out.residual = x;
    return out;
}

Real f_decode(const FExpansionSystem& sys, const FDigits& d, std::size_t depth) {
    if (depth == 0 || depth > d.digits.size()) throw DomainError("depth must lie in [1, digit count]");
    const Prec prec = std::max<Prec>(d.residual.prec(), kDefaultPrecision);
    Real v = depth == d.digits.size() ? Real(d.residual, prec) : Real(prec);
    for (std::size_t k = depth; k-- > 0;) v = sys.f(Real(d.digits[k], prec) + v);
    return v;
}

FDigits reciprocal_encode_ratio(const mpz_class& num, const mpz_class& den, std::size_t n, Prec prec) {
    if (!(num > 0) || !(den > 0) || num > den) throw DomainError("ratio must lie in (0, 1]");
    mpz_class p = num, q = den;
    FDigits out;
    for (std::size_t i = 0; i < n; ++i) {
        // x = p/q, 1/x = q/p = a + r/p
        mpz_class a = q / p, r = q % p;
        out.digits.push_back(a);
        q = p;
        p = r;
        if (p == 0) {
            out.terminated = true;
            break;
        }
    }
    out.residual = out.terminated ? Real(prec) : Real(p, prec) / Real(q, prec);
    return out;
}

FDigits beta_encode(const Real& beta, const Real& x_in, std::size_t n) {
    if (!(beta > 1.0)) throw DomainError("beta must exceed 1");
    if (!(x_in >= 0.0) || !(x_in < 1.0)) throw DomainError("x must lie in [0, 1)");
    const Prec prec = std::max({beta.prec(), x_in.prec(), kDefaultPrecision});
    Real b(beta, prec), x(x_in, prec);
    FDigits out;
    for (std::size_t i = 0; i < n; ++i) {
        Real y = b * x;
        bool snapped = false;
        mpz_class d = snapped_floor(y, snapped);
        out.digits.push_back(d);
        x = snapped ? Real(prec) : y - Real(d, prec);
        if (x.sign() < 0) x = Real(prec);
    }
    out.residual = x;
    return out;
}

Real beta_value(const Real& beta, const std::vector<mpz_class>& digits) {
    Real v(beta.prec());
    for (std::size_t k = digits.size(); k-- > 0;) v = (v + Real(digits[k], beta.prec())) / beta;
    return v;
}

}  // namespace ccomp
