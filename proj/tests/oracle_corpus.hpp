#pragma once

// Streams with known square-root-nest behavior, plus a log-domain evaluator
// that can follow them to depth 60 without overflow.

#include "ccomp/criteria.hpp"
#include "ccomp/termspec.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ccomp::testing {

struct OracleStream {
    std::string label;
    TermStream terms;
    Verdict expected;
};

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

inline std::vector<OracleStream> oracle_corpus(unsigned seed = 20240601) {
    std::mt19937_64 rng(seed);
    auto u = [&rng](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    std::vector<OracleStream> out;
    for (int i = 0; i < 40; ++i) {
        std::string spec = "const:a=" + fmt(u(0.1, 100.0));
        out.push_back({spec, parse_term_stream(spec), Verdict::Converges});
    }
    for (int i = 0; i < 40; ++i) {
        double c = u(0.5, 20.0), k = u(0.5, 4.0);
        auto t = TermStream::from_functions([c, k](std::size_t n, Prec p) {
            return Real(c, p) * pow(Real(static_cast<long>(n + 1), p), Real(k, p));
        });
        out.push_back({"poly:c=" + fmt(c) + ",k=" + fmt(k), t, Verdict::Converges});
    }
    for (int i = 0; i < 40; ++i) {
        std::string spec = "dexp:base=" + fmt(u(2.0, 10.0)) + ",growth=" + fmt(u(1.05, 1.5));
        out.push_back({spec, parse_term_stream(spec), Verdict::Converges});
    }
    for (int i = 0; i < 40; ++i) {
        std::string spec = "dexp:base=" + fmt(u(2.0, 10.0)) + ",growth=" + fmt(u(2.5, 4.0));
        out.push_back({spec, parse_term_stream(spec), Verdict::Diverges});
    }
    for (int i = 0; i < 20; ++i) {
        std::string spec = "eexp:c=" + fmt(u(0.1, 0.3));
        out.push_back({spec, parse_term_stream(spec), Verdict::Converges});
    }
    for (int i = 0; i < 20; ++i) {
        std::string spec = "eexp:c=" + fmt(u(0.9, 1.4));
        out.push_back({spec, parse_term_stream(spec), Verdict::Diverges});
    }
    return out;
}

// log of sqrt(a_0 + sqrt(a_1 + ... + sqrt(a_depth))), seed 0.
inline Real log_nest_value(const TermStream& t, std::size_t depth, Prec prec) {
    Real lz = Real::inf(prec, -1);
    for (std::size_t i = depth + 1; i-- > 0;) {
        Real la = t.log_at(i, prec);
        Real hi = max(la, lz), lo = min(la, lz);
        Real ls = lo.is_inf() ? hi : hi + log1p(exp(lo - hi));
        lz = ldexp(ls, -1);
    }
    return lz;
}

// Classifies the approximants up to depth 60: settled, growing without bound, or unclear.
inline Verdict direct_behavior(const TermStream& t, Prec prec = 192) {
    Real v50 = log_nest_value(t, 50, prec);
    Real v55 = log_nest_value(t, 55, prec);
    Real v60 = log_nest_value(t, 60, prec);
    Real scale = max(Real(1L, prec), abs(v60));
    if (abs(v60 - v55) <= scale * Real(1e-6, prec) && abs(v55 - v50) <= scale * Real(1e-5, prec))
        return Verdict::Converges;
    if (v60 - v55 > 1.0 && v55 - v50 > 0.0) return Verdict::Diverges;
    return Verdict::Inconclusive;
}

inline std::vector<ConvergenceReport> all_sqrt_criteria(const TermStream& t, std::size_t N) {
    return {herschfeld_vijayaraghavan(t, N), polya_loglog(t, N), polya_szego_series_test(t, N),
            herschfeld_theorem3(t, N, 0.5), andrushkiw(t, N, 2.0)};
}

}  // namespace ccomp::testing
