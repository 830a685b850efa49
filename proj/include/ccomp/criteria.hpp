#pragma once

#include "ccomp/engine.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ccomp {

enum class Verdict { Converges, Diverges, Inconclusive };
std::string to_string(Verdict v);

// Relative half-width of the undecided band around every threshold.
inline constexpr double kVerdictBand = 1e-6;

struct ConvergenceReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string criterion;
    Real statistic;
    std::size_t sample_depth = 0;
    std::string notes;
    std::optional<std::size_t> offending_index;
    std::vector<std::pair<std::string, Real>> extras;  // e.g. r and R for the Andrushkiw test

    const Real* extra(const std::string& key) const;
};

// Bounded iff limsup a_n^(2^-n) is finite.
ConvergenceReport herschfeld_vijayaraghavan(const TermStream& terms, std::size_t N,
                                            Prec prec = kDefaultPrecision);

// Tail max of log(log a_n)/n against log 2.
ConvergenceReport polya_loglog(const TermStream& terms, std::size_t N, Prec prec = kDefaultPrecision);

// Sufficient test: the series sum 2^-n a_n (a_1...a_n)^(-1/2), with a_n the
// n-th term counted from 1 (stream index n-1).
ConvergenceReport polya_szego_series_test(const TermStream& terms, std::size_t N,
                                          Prec prec = kDefaultPrecision);

// Per-term exponents come from TermRecord::exponent; `default_exponent` fills
// records that carry none.
ConvergenceReport herschfeld_theorem3(const TermStream& terms, std::size_t N, double default_exponent = 0.5,
                                      Prec prec = kDefaultPrecision);

// Root index of term n is 1/exponent (default_root when the record has none).
ConvergenceReport andrushkiw(const TermStream& terms, std::size_t N, double default_root = 2.0,
                             Prec prec = kDefaultPrecision);

// ((p-1)^(p-1) / p^p)^(1/(p-1)): the largest constant term a for which
// a + x^p has a fixed point reachable from 0.
Real jones_power_radius(const Real& p);

ConvergenceReport jones_power_tests(const TermStream& terms, const Real& p, std::size_t N,
                                    Prec prec = kDefaultPrecision);

ConvergenceReport jones_reciprocal_root(const TermStream& terms, const Real& r, std::size_t N,
                                        Prec prec = kDefaultPrecision);

// Monotone sublinear map for the general criterion. `log_iterate(n, log p)`
// returns log f^n(p) for maps where the direct value would overflow.
struct MonotoneMapSpec {
    std::function<Real(const Real&)> f;
    std::function<Real(std::size_t, const Real&)> log_iterate;
    bool increasing = false;
    bool sublinear = false;  // f(a x) <= a^alpha f(x) with 0 < alpha < 1
    std::string name = "f";

    static MonotoneMapSpec square_root();
};

ConvergenceReport laugwitz_general(const MonotoneMapSpec& map, const TermStream& terms, std::size_t N,
                                   Prec prec = kDefaultPrecision);

struct RegionSpec {
    double theta = 0.0;
    double epsilon = 0.0;

    double upper_arg() const;  // g(theta)
    bool valid() const;
    bool contains(std::complex<double> a) const;
};

struct ComplexTermStream {
    std::function<std::complex<double>(std::size_t)> term;
    // Optional log|a_n| for moduli beyond double range.
    std::function<double(std::size_t)> log_modulus;

    static ComplexTermStream constant(std::complex<double> a);
};

ConvergenceReport schuske_thron_region(const RegionSpec& region, const ComplexTermStream& terms, std::size_t N);

struct DifferentiableMapSpec {
    std::function<Real(const Real&)> f;
    std::function<Real(const Real&)> df;  // optional; numeric central difference otherwise
};

// Numeric derivative with step 2^(-prec/3) scaled by max(1, |x|).
Real central_difference(const std::function<Real(const Real&)>& f, const Real& x, Prec prec);

ConvergenceReport isenkrahe_fixed_point(const DifferentiableMapSpec& map, const Real& guess,
                                        Prec prec = kDefaultPrecision, std::size_t max_iter = 500);

}  // namespace ccomp
