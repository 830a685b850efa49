#include "ccomp/products.hpp"

#include "ccomp/engine.hpp"
#include "ccomp/radicals.hpp"

namespace ccomp {

Real ProductSpec::partial(std::size_t n, Prec prec) const {
    Real p(1L, prec);
    for (std::size_t k = 1; k <= n; ++k) {
        Real f = factor(k, prec);
        if (!f.is_finite() || f.is_zero()) throw DomainError(name + ": factor " + std::to_string(k) + " is not finite and nonzero");
        p *= f;
    }
    return p;
}

namespace {

void require_positive(std::size_t n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + " must be at least 1");
}

// 2 - R_j for the all-plus nest of j twos (R_0 = 0), using
// 2 - R_j = (2 - R_{j-1}) / (2 + R_j).
Real two_minus_nest(std::size_t j, Prec prec) {
    Real r(prec), d(2L, prec);
    for (std::size_t i = 1; i <= j; ++i) {
        r = sqrt(r + 2L);
        d /= r + 2L;
    }
    return d;
}

Real nest_of_twos(std::size_t j, Prec prec) {
    if (j == 0) return Real(prec);
    EvalRequest req{CompositionKind::square_root(), TermStream::constant(Real(2L, prec)), j - 1, Real(prec), prec};
    return eval_backward(req);
}

}  // namespace

Real viete_product(std::size_t n, Prec prec) {
    require_positive(n, "factor count");
    return viete_spec().partial(n, prec);
}

ProductSpec viete_spec() {
    ProductSpec s;
    s.name = "viete";
    s.factor = [](std::size_t k, Prec prec) { return nest_of_twos(k, prec) / 2L; };
    s.target = Real(2L, kDefaultPrecision) / Real::pi(kDefaultPrecision);
    s.factor_count = 20;
    return s;
}

Real catalan_pi(std::size_t n, Prec prec) {
    require_positive(n, "n");
    return ldexp(sqrt(two_minus_nest(n - 1, prec)), static_cast<long>(n));
}

Real candido_ratio(std::size_t n, Prec prec) {
    if (n < 2) throw DomainError("n must be at least 2");
    Real num = sqrt(two_minus_nest(n - 2, prec));
    return ldexp(num / nest_of_twos(n - 1, prec), static_cast<long>(n) - 1);
}

std::pair<Real, Real> polygon_bounds_pi(std::size_t q, Prec prec) {
    require_positive(q, "q");
    // 2 - c_q cancels about 2q bits; evaluate the nest with that many guard bits.
    const Prec work = prec + 2 * static_cast<Prec>(q) + 32;
    Real c = sqrt(Real(3L, work));
    if (q > 1) {
        EvalRequest req{CompositionKind::square_root(), TermStream::constant(Real(2L, work)), q - 2, c, work};
        c = eval_backward(req);
    }
    Real side = sqrt(2L - c);
    Real lower = ldexp(side * 3L, static_cast<long>(q));
    Real upper = ldexp(side * 3L, static_cast<long>(q) + 1) / sqrt(2L + c);
    return {Real(lower, prec), Real(upper, prec)};
}

Real euler_secant_product(std::size_t n, const Real& A) {
    require_positive(n, "n");
    if (!(A > 0.0) || !(A < Real::pi(A.prec()))) throw DomainError("A must lie in (0, pi)");
    Real den(1L, A.prec());
    for (std::size_t k = 1; k <= n; ++k) den *= cos(ldexp(A, -static_cast<long>(k)));
    return sin(A) / den;
}

Real osler_union_product(std::size_t p, std::size_t wallis_terms, Prec prec) {
    Real prod(1L, prec);
    const Real half = ldexp(Real(1L, prec), -1);
    Real r(prec);
    for (std::size_t n = 1; n <= p; ++n) {
        r = n == 1 ? sqrt(half) : sqrt(half + half * r);
        prod *= r;
    }
    if (p + 1 >= 62) return prod;  // every Wallis factor equals 1 at this precision
    const long step = 1L << (p + 1);
    for (std::size_t m = 1; m <= wallis_terms; ++m) {
        Real t(static_cast<long>(m) * step, prec);
        prod *= (t - 1L) * (t + 1L) / (t * t);
    }
    return prod;
}

Real levin_lemniscate_product(std::size_t n, Prec prec) {
    require_positive(n, "factor count");
    return levin_spec().partial(n, prec);
}

ProductSpec levin_spec() {
    ProductSpec s;
    s.name = "levin";
    s.factor = [](std::size_t k, Prec prec) {
        const Real half = ldexp(Real(1L, prec), -1);
        Real f = sqrt(half);
        for (std::size_t i = 1; i < k; ++i) f = sqrt(half + half / f);
        return f;
    };
    s.target = Real(2L, kDefaultPrecision) / lemniscate_constant_reference();
    s.factor_count = 24;
    return s;
}

Real lemniscate_constant_reference(Prec prec) { return Real(std::string_view("2.6220575542"), prec); }

Real osler_log_product(const Real& x, std::size_t n) {
    require_positive(n, "factor count");
    const Prec prec = x.prec();
    if (!(x > 0.0)) throw DomainError("x must be positive");
    if (x == 1.0) throw DomainError("x = 1 makes the product formula 0/0");
    const Real half = ldexp(Real(1L, prec), -1);
    Real rx = sqrt(x);
    Real c = (x + 1L) / (2L * rx);
    Real f = sqrt(half + half * c);
    Real prod = f;
    for (std::size_t k = 2; k <= n; ++k) {
        f = sqrt(half + half * f);
        prod *= f;
    }
    return (x - 1L) / (rx * prod);
}

Real hauser_ln2(std::size_t n, Prec prec) {
    Real x(std::string_view("2.5"), prec);
    return ldexp(nyblom_closed_form(x, static_cast<unsigned>(n) + 1, NyblomVariant::Minus), static_cast<long>(n));
}

}  // namespace ccomp
