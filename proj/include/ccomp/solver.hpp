#pragma once

#include "ccomp/engine.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ccomp {

// x^m + p x^n + q = 0 with m > n >= 1.
struct Trinomial {
    int m = 2;
    int n = 1;
    Real p;
    Real q;

    Real value(const Real& x) const;
    Real scale(const Real& x) const;  // 1 + |x|^m + |p||x|^n + |q|
    // (n |p| / m)^(1/(m-n)): roots from algorithm A lie inside, from B outside.
    Real hoffmann_bound() const;
};

enum class HoffmannAlgorithm { A, B };

struct TrinomialRoot {
    Real root;
    std::size_t iterations = 0;
    Real residual;
    Real bound;
    bool inside_bound = false;
};

// A: x <- (-q / (p + x^(m-n)))^(1/n) from 0.
// B: x <- (-p - q / x^n)^(1/(m-n)) from +inf, whose first step is (-p)^(1/(m-n)).
// tol <= 0 selects 2^-(prec-16).
TrinomialRoot hoffmann_solve(const Trinomial& t, HoffmannAlgorithm alg, std::optional<Real> x0 = std::nullopt,
                             std::size_t max_iter = 100000, double tol = 0.0, Prec prec = kDefaultPrecision);

// x^n - a x + sign*b = 0 rescaled by x = y a^(1/(n-1)) into y = (y - sign*c)^(1/n),
// c = b / (a a^(1/(n-1))), and solved as a constant continued root from `seed`.
struct AstrandResult {
    Real c;
    Real y;
    Real root;
    Real residual;
    ApproximantTrace trace;
};

AstrandResult astrand_transform(int n, const Real& a, const Real& b, int sign, const Real& seed,
                                double tol = 0.0, std::size_t max_depth = 100000);

enum class Approach { Monotone, Oscillating, Undetermined };
std::string to_string(Approach a);

struct FixedPointMap {
    std::function<Real(const Real&)> f;
    std::function<Real(const Real&)> df;  // optional
};

struct FixedPointResult {
    Real root;
    std::vector<Real> trace;
    Real derivative;  // f'(root), analytic when available
    Approach approach = Approach::Undetermined;
    std::size_t iterations = 0;
};

// Plain iteration x <- f(x), or with `newton` the transformed map
// (f(x) - x f'(x)) / (1 - f'(x)). Stops when |f(x) - x| <= tol.
FixedPointResult iterate_fixed_point(const FixedPointMap& map, const Real& x0, std::size_t max_iter, double tol,
                                     bool newton = false);

// Classifies a convergent trace by the signs of successive steps.
Approach classify_approach(const std::vector<Real>& trace);

// Kepler's equation E = M + e sin E.
FixedPointResult solve_kepler(const Real& M, const Real& e, double tol = 1e-30, std::size_t max_iter = 10000);

}  // namespace ccomp
