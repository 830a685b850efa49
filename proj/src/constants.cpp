#include "ccomp/constants.hpp"

#include "ccomp/cotangent.hpp"
#include "ccomp/engine.hpp"

namespace ccomp {

namespace {

Real tolerance_bits(Prec prec, long slack = 8) { return ldexp(Real(1L, prec), -static_cast<long>(prec) + slack); }

Real limit_of(const CompositionKind& kind, TermStream terms, Prec prec, Direction dir, Real seed) {
    const Prec work = prec + 32;
    EvalRequest req{kind, std::move(terms), 0, Real(seed, work), work};
    auto r = estimate_limit(req, tolerance_bits(work, 24), 20000, dir);
    return Real(r.value, prec);
}

// Fixed point of y <- (addend + mult * y)^(1/index), iterated from 0.
Real constant_root_limit(const Real& addend, const Real& mult, const Real& index, Prec prec) {
    Real y(prec), prev(prec);
    const Real inv = Real(1L, prec) / index;
    const Real tol = tolerance_bits(prec, 16);
    for (int i = 0; i < 100000; ++i) {
        prev = y;
        y = pow(addend + mult * y, inv);
        if (abs(y - prev) <= tol * max(Real(1L, prec), abs(y))) return y;
    }
    throw Error("NoConvergence", "defining nest did not settle");
}

}  // namespace

Real bisect(const std::function<Real(const Real&)>& g, Real lo, Real hi) {
    const Prec prec = std::max(lo.prec(), hi.prec());
    int slo = g(lo).sign(), shi = g(hi).sign();
    if (slo == 0) return lo;
    if (shi == 0) return hi;
    if (slo == shi) throw DomainError("bisection bracket has no sign change");
    for (Prec it = 0; it < prec + 64; ++it) {
        Real mid = ldexp(lo + hi, -1);
        if (mid == lo || mid == hi) break;
        int s = g(mid).sign();
        if (s == 0) return mid;
        if (s == slo) lo = mid;
        else hi = mid;
    }
    return ldexp(lo + hi, -1);
}

Real kasner_number(Prec prec) {
    TermStream terms = TermStream::arithmetic(Real(1L, 64), Real(1L, 64), Real(1L, 64), Real(0L, 64));
    return limit_of(CompositionKind::square_root(), terms, prec, Direction::Backward, Real(prec));
}

std::vector<Real> paris_sequence(std::size_t n, Prec prec) {
    const Prec work = 2 * prec + 64;
    const Real theta = golden_ratio(work);
    const Real two_theta = 2L * theta;
    Real u(1L, work), gap = theta - 1L, scale = two_theta;
    std::vector<Real> out{Real(gap * scale / 2L, prec)};
    for (std::size_t k = 2; k <= n; ++k) {
        u = sqrt(u + 1L);
        gap /= theta + u;  // theta - u_k = (theta - u_{k-1}) / (theta + u_k)
        scale *= two_theta;
        out.emplace_back(gap * scale / 2L, prec);
    }
    return out;
}

Real paris_constant(Prec prec) {
    const Prec work = 2 * prec + 64;
    const Real theta = golden_ratio(work);
    const Real two_theta = 2L * theta;
    const Real tol = tolerance_bits(prec, 2);
    Real u(1L, work), gap = theta - 1L, scale = two_theta;
    Real k = gap * scale / 2L;
    for (int i = 2; i < 100000; ++i) {
        u = sqrt(u + 1L);
        gap /= theta + u;
        scale *= two_theta;
        Real next = gap * scale / 2L;
        bool done = abs(next - k) <= tol;
        k = next;
        if (done) return Real(k, prec);
    }
    throw Error("NoConvergence", "Paris sequence did not settle");
}

Real plastic_constant(Prec prec) {
    return limit_of(CompositionKind::rth_root(3), TermStream::constant(Real(1L, prec)), prec, Direction::Forward,
                    Real(prec));
}

Real golden_ratio(Prec prec) { return closed_form_constant_sqrt(Real(1L, prec)); }

Real dence_k0(Prec prec) {
    auto g = [](const Real& k) { return ((k - 2L) * k + 1L) * k - 1L; };  // k^3 - 2k^2 + k - 1
    return bisect(g, Real(1L, prec), Real(2L, prec));
}

Real dence_a0(Prec prec) {
    Real k = dence_k0(prec);
    return sqrt(k - Real(std::string_view("0.75"), prec)) - ldexp(Real(1L, prec), -1);
}

Real lim2007_constant(Prec prec) {
    auto g = [](const Real& n) { return pow(n, n) - n - 1L; };  // n^n = n + 1
    return bisect(g, Real(1L, prec), Real(2L, prec));
}

namespace {

Real lim2008_residual(const Real& x) { return pow(x, x - 1L) - x - 1L; }  // x^(x-1) = 1 + x

}  // namespace

Real lim2008_m(Prec prec) { return bisect(lim2008_residual, ldexp(Real(1L, prec), -10), Real(1L, prec)); }

Real lim2008_n(Prec prec) { return bisect(lim2008_residual, Real(2L, prec), Real(3L, prec)); }

Real somos_constant(Prec prec, long t) {
    if (t < 2) throw DomainError("Somos constant needs t >= 2");
    const Prec work = prec + 32;
    const Real tol = tolerance_bits(work, 0);
    Real sum(work), tpow(1L, work);
    for (long n = 2;; ++n) {
        tpow = pow(Real(t, work), n);
        Real term = log(Real(n, work)) / tpow;
        sum += term;
        // Remaining terms are at most twice the next one once n/(t-1) exceeds 1.
        if (ldexp(log(Real(n + 1, work)) / (tpow * t), 1) <= tol) break;
    }
    return Real(exp(sum), prec);
}

Real lim_nest_residual(const std::string& name, Prec prec) {
    Real x(prec);
    Real nest(prec);
    if (name == "lim2007") {
        x = lim2007_constant(prec);
        nest = constant_root_limit(Real(1L, prec), Real(1L, prec), x, prec);
    } else if (name == "lim2008_m" || name == "lim2008_n") {
        x = name == "lim2008_m" ? lim2008_m(prec) : lim2008_n(prec);
        nest = constant_root_limit(x, x, x, prec);
    } else {
        throw UnknownConstant("no defining nest for '" + name + "'");
    }
    return abs(x - nest);
}

const std::vector<NamedConstant>& constant_registry() {
    static const std::vector<NamedConstant> registry = {
        {"kasner", "1.757933", "paper", "Herschfeld 1935", kasner_number},
        {"paris", "1.098630", "paper", "Paris 1987", paris_constant},
        {"plastic", "1.32471957", "paper", "Lim 2010", plastic_constant},
        {"lehmer", "0.59263", "paper", "Lehmer 1938",
         [](Prec p) {
             // Digit bit lengths double, so a handful of digits exhausts any precision.
             std::size_t n = 4;
             while (mpz_sizeinbase(lehmer_digits(n).back().get_mpz_t(), 2) < static_cast<std::size_t>(p)) ++n;
             return lehmer_constant(n + 1, p);
         }},
        {"dence_k0", "1.7548777", "paper", "Dence 1983", dence_k0},
        {"dence_a0", "0.5024359", "paper", "Dence 1983", dence_a0},
        {"lim2007", "1.7767750401", "paper", "Lim 2007a", lim2007_constant},
        {"lim2008_m", "0.4758608124", "paper", "Lim 2008", lim2008_m},
        {"lim2008_n", "2.398384383", "paper", "Lim 2008", lim2008_n},
        {"somos", "1.6616879496335941212958", "derived: log-sum at doubled precision", "Sondow-Hadjicostas",
         [](Prec p) { return somos_constant(p, 2); }},
        {"golden", "1.6180339887498948482", "closed form", "Paris 1987", golden_ratio},
    };
    return registry;
}

const NamedConstant& find_constant(const std::string& name) {
    for (const auto& c : constant_registry())
        if (c.name == name) return c;
    throw UnknownConstant("unknown constant '" + name + "'");
}

Real compute_constant(const std::string& name, Prec prec) {
    if (prec < kMinPrecision) throw DomainError("precision below 53 bits");
    return find_constant(name).compute(prec);
}

}  // namespace ccomp
