#include "ccomp/solver.hpp"

#include "ccomp/criteria.hpp"

#include <cmath>

namespace ccomp {

Real Trinomial::value(const Real& x) const { return pow(x, static_cast<long>(m)) + p * pow(x, static_cast<long>(n)) + q; }

Real Trinomial::scale(const Real& x) const {
    Real ax = abs(x);
    return pow(ax, static_cast<long>(m)) + abs(p) * pow(ax, static_cast<long>(n)) + abs(q) + 1L;
}

Real Trinomial::hoffmann_bound() const {
    const Prec prec = std::max(p.prec(), q.prec());
    Real base = Real(static_cast<long>(n), prec) * abs(p) / static_cast<long>(m);
    return pow(base, Real(1L, prec) / static_cast<long>(m - n));
}

namespace {

void check_trinomial(const Trinomial& t) {
    if (!(t.m > t.n && t.n >= 1 && t.m >= 2)) throw DomainError("trinomial needs m > n >= 1");
}

// Real k-th root, real-signed for odd k.
Real signed_root(const Real& y, int k) {
    if (y.sign() < 0 && k % 2 == 0) throw DomainError("negative radicand under an even root");
    if (k == 1) return y;
    if (k == 2) return sqrt(y);
    return rootn(y, static_cast<unsigned long>(k));
}

Real divergence_cut(Prec prec) { return pow(Real(10L, prec), static_cast<long>(prec / 8)); }

Real default_tol(double tol, Prec prec) {
    return tol > 0.0 ? Real(tol, prec) : ldexp(Real(1L, prec), -static_cast<long>(prec) + 16);
}

}  // namespace

TrinomialRoot hoffmann_solve(const Trinomial& t, HoffmannAlgorithm alg, std::optional<Real> x0, std::size_t max_iter,
                             double tol_in, Prec prec) {
    check_trinomial(t);
    const Real p(t.p, prec), q(t.q, prec), tol = default_tol(tol_in, prec);
    const Real cut = divergence_cut(prec);
    const long gap = t.m - t.n;
    auto step = [&](const Real& x) -> Real {
        if (alg == HoffmannAlgorithm::A) {
            Real den = p + pow(x, gap);
            if (den.is_zero()) throw NoConvergence("algorithm A hit a zero denominator");
            return signed_root(-q / den, t.n);
        }
        if (x.is_inf()) return signed_root(-p, static_cast<int>(gap));
        if (x.is_zero()) throw NoConvergence("algorithm B reached zero");
        return signed_root(-p - q / pow(x, static_cast<long>(t.n)), static_cast<int>(gap));
    };
    Real x = x0 ? Real(*x0, prec) : (alg == HoffmannAlgorithm::A ? Real(prec) : Real::inf(prec));
    for (std::size_t i = 1; i <= max_iter; ++i) {
        Real next = step(x);
        if (!next.is_finite() || abs(next) > cut) throw NoConvergence("iterates left every bounded region");
        bool settled = !x.is_inf() && abs(next - x) <= tol * max(Real(1L, prec), abs(next));
        x = next;
        if (settled && abs(t.value(x)) <= tol * t.scale(x) * static_cast<long>(t.m + 1)) {
            TrinomialRoot r;
            r.root = x;
            r.iterations = i;
            r.residual = abs(t.value(x));
            r.bound = Trinomial{t.m, t.n, p, q}.hoffmann_bound();
            r.inside_bound = abs(x) < r.bound;
            return r;
        }
    }
    throw NoConvergence("no root within " + std::to_string(max_iter) + " iterations");
}

AstrandResult astrand_transform(int n, const Real& a, const Real& b, int sign, const Real& seed, double tol_in,
                                std::size_t max_depth) {
    if (n < 2) throw DomainError("degree must be at least 2");
    if (!(a > 0.0)) throw DomainError("a must be positive");
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    const Prec prec = std::max({a.prec(), b.prec(), seed.prec(), kDefaultPrecision});
    Real scale = n == 2 ? Real(a, prec) : pow(Real(a, prec), Real(1L, prec) / static_cast<long>(n - 1));
    AstrandResult out;
    out.c = Real(b, prec) / (Real(a, prec) * scale);
    Real addend = sign > 0 ? -out.c : Real(out.c, prec);
    EvalRequest req;
    req.kind = n == 2 ? CompositionKind::square_root() : CompositionKind::rth_root(n);
    req.terms = TermStream::constant(addend);
    req.seed = Real(seed, prec);
    req.precision = prec;
    auto lim = estimate_limit(req, default_tol(tol_in, prec), max_depth, Direction::Forward);
    out.y = lim.value;
    out.trace = std::move(lim.trace);
    out.root = out.y * scale;
    Real r = out.root;
    out.residual = abs(pow(r, static_cast<long>(n)) - Real(a, prec) * r + Real(b, prec) * static_cast<long>(sign));
    return out;
}

std::string to_string(Approach a) {
    switch (a) {
        case Approach::Monotone: return "monotone";
        case Approach::Oscillating: return "oscillating";
        case Approach::Undetermined: return "undetermined";
    }
    return "?";
}

Approach classify_approach(const std::vector<Real>& trace) {
    // Signs of x_{k+1} - x_k, ignoring steps lost in rounding at the end.
    std::vector<int> s;
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
        Real d = trace[k + 1] - trace[k];
        Real floor_mag = ldexp(max(Real(1L, d.prec()), abs(trace[k])), -static_cast<long>(d.prec() / 2));
        if (abs(d) <= floor_mag) break;
        s.push_back(d.sign());
    }
    if (s.size() < 2) return Approach::Undetermined;
    bool same = true, alternating = true;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        same = same && s[k] == s[k + 1];
        alternating = alternating && s[k] == -s[k + 1];
    }
    if (same) return Approach::Monotone;
    if (alternating) return Approach::Oscillating;
    return Approach::Undetermined;
}

FixedPointResult iterate_fixed_point(const FixedPointMap& map, const Real& x0, std::size_t max_iter, double tol,
                                     bool newton) {
    if (!map.f) throw DomainError("map value function missing");
    if (newton && !map.df) throw DerivativeUnavailable("Newton mode needs the derivative f'");
    const Prec prec = std::max(x0.prec(), kDefaultPrecision);
    const Real tolerance(tol, prec);
    const Real cut = divergence_cut(prec);
    auto g = [&](const Real& x) -> Real {
        if (!newton) return map.f(x);
        Real d = map.df(x);
        Real den = 1L - d;
        if (den.is_zero()) throw NoConvergence("f'(x) = 1 stalls the Newton form");
        return (map.f(x) - x * d) / den;
    };
    FixedPointResult out;
    Real x(x0, prec);
    out.trace.push_back(x);
    for (std::size_t i = 0; i <= max_iter; ++i) {
        Real fx = map.f(x);
        if (!fx.is_finite()) throw NoConvergence("map value is not finite");
        if (abs(fx - x) <= tolerance) {
            out.root = x;
            out.iterations = i;
            out.derivative = map.df ? Real(map.df(x), prec) : central_difference(map.f, x, prec);
            out.approach = classify_approach(out.trace);
            return out;
        }
        if (i == max_iter) break;
        x = g(x);
        if (!x.is_finite() || abs(x) > cut) throw NoConvergence("iterates left every bounded region");
        out.trace.push_back(x);
    }
    throw NoConvergence("no fixed point within " + std::to_string(max_iter) + " iterations");
}

FixedPointResult solve_kepler(const Real& M, const Real& e, double tol, std::size_t max_iter) {
    if (!(abs(e) < 1.0)) throw DomainError("eccentricity must lie in [0, 1)");
    FixedPointMap map;
    map.f = [M, e](const Real& E) { return Real(M, E.prec()) + Real(e, E.prec()) * sin(E); };
    map.df = [e](const Real& E) { return Real(e, E.prec()) * cos(E); };
    return iterate_fixed_point(map, M, max_iter, tol);
}

}  // namespace ccomp
