#pragma once

#include "ccomp/errors.hpp"
#include "ccomp/real.hpp"

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ccomp {

enum class Family { SquareRoot, RthRoot, Power, ReciprocalRoot, Cotangent, Logarithm, Fraction };

// Map family plus its parameter: r for the root kinds, p for Power, the log
// base for Logarithm. SquareRoot, Cotangent and Fraction ignore it.
struct CompositionKind {
    Family family = Family::SquareRoot;
    double param = 2.0;

    static CompositionKind square_root() { return {Family::SquareRoot, 2.0}; }
    static CompositionKind rth_root(double r);
    static CompositionKind power(double p);
    static CompositionKind reciprocal_root(double r);
    static CompositionKind cotangent() { return {Family::Cotangent, 0.0}; }
    static CompositionKind logarithm(double base);
    static CompositionKind fraction() { return {Family::Fraction, -1.0}; }

    bool reciprocal() const {
        return family == Family::ReciprocalRoot || family == Family::Cotangent ||
               family == Family::Fraction;
    }
    std::string name() const;
};

// One level of the composition. With the root kinds the level computes
// sign * (addend + multiplier * z)^exponent; `exponent` overrides 1/r when set.
struct TermRecord {
    std::size_t index = 0;
    Real addend;
    Real multiplier;
    int sign = 1;
    std::optional<Real> exponent;

    TermRecord() = default;
    TermRecord(std::size_t i, Real a, Real b, int s = 1, std::optional<Real> e = std::nullopt)
        : index(i), addend(std::move(a)), multiplier(std::move(b)), sign(s), exponent(std::move(e)) {}
};

using TermGenerator = std::function<TermRecord(std::size_t index, Prec prec)>;
using LogAddend = std::function<Real(std::size_t index, Prec prec)>;

struct TermStream {
    TermGenerator generator;
    std::optional<std::size_t> period;
    std::string description;
    // Optional log(addend) for streams whose terms overflow any float format.
    LogAddend log_addend;

    TermRecord at(std::size_t i, Prec prec) const { return generator(i, prec); }
    Real log_at(std::size_t i, Prec prec) const;

    static TermStream constant(const Real& a, const Real& b = Real(1L, 64), int sign = 1);
    static TermStream arithmetic(const Real& a0, const Real& da, const Real& b0, const Real& db);
    static TermStream periodic_signs(const Real& a, std::vector<int> inner_signs, const Real& b = Real(1L, 64));
    static TermStream explicit_list(std::vector<Real> addends);
    static TermStream from_functions(std::function<Real(std::size_t, Prec)> addend,
                                     std::function<Real(std::size_t, Prec)> multiplier = nullptr,
                                     std::string description = "custom");
};

struct EvalRequest {
    CompositionKind kind;
    TermStream terms;
    std::size_t depth = 0;
    std::optional<Real> seed;  // family default when empty; +inf allowed
    Prec precision = kDefaultPrecision;
};

struct ApproximantTrace {
    std::vector<Real> values;
    std::vector<Real> deltas;  // deltas[0] is zero by convention
    std::optional<std::size_t> converged_at;
    Real tolerance_used;
    Real seed;
};

class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, ApproximantTrace trace = {})
        : Error("NoConvergence", what), trace_(std::move(trace)) {}
    const ApproximantTrace& trace() const { return trace_; }

private:
    ApproximantTrace trace_;
};

enum class Direction { Backward, Forward };

Real default_seed(const CompositionKind& kind, Prec prec);

// One application t(z) of a single level; +inf arguments map to lim_{z->inf} t(z).
Real apply_term(const CompositionKind& kind, const TermRecord& term, const Real& z, Prec prec);

Real eval_backward(const EvalRequest& req);
Real eval_forward(const EvalRequest& req);

struct LimitResult {
    Real value;
    ApproximantTrace trace;
};

LimitResult estimate_limit(const EvalRequest& req, const Real& tolerance, std::size_t max_depth,
                           Direction direction = Direction::Backward);

// (1 + sqrt(1 + 4a)) / 2
Real closed_form_constant_sqrt(const Real& a);
// Complex constant terms. sqrt takes the root with nonnegative real part and
// the positive imaginary axis for negative reals, which std::sqrt already does.
std::complex<double> closed_form_constant_sqrt(std::complex<double> a);

}  // namespace ccomp
