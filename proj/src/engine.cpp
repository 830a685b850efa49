#include "ccomp/engine.hpp"

#include <cmath>
#include <sstream>

namespace ccomp {

CompositionKind CompositionKind::rth_root(double r) {
    if (!(r > 1.0)) throw DomainError("root index must exceed 1");
    return {Family::RthRoot, r};
}

CompositionKind CompositionKind::power(double p) {
    if (!(p > 1.0)) throw DomainError("power must exceed 1");
    return {Family::Power, p};
}

CompositionKind CompositionKind::reciprocal_root(double r) {
    if (!(r > 1.0)) throw DomainError("reciprocal root index must exceed 1");
    return {Family::ReciprocalRoot, r};
}

CompositionKind CompositionKind::logarithm(double base) {
    if (!(base > 1.0)) throw DomainError("logarithm base must exceed 1");
    return {Family::Logarithm, base};
}

std::string CompositionKind::name() const {
    std::ostringstream os;
    switch (family) {
        case Family::SquareRoot: return "sqrt";
        case Family::RthRoot: os << "root:r=" << param; return os.str();
        case Family::Power: os << "power:p=" << param; return os.str();
        case Family::ReciprocalRoot: os << "recip:r=" << param; return os.str();
        case Family::Cotangent: return "cot";
        case Family::Logarithm: os << "log:base=" << param; return os.str();
        case Family::Fraction: return "fraction";
    }
    return "unknown";
}

Real TermStream::log_at(std::size_t i, Prec prec) const {
    if (log_addend) return log_addend(i, prec);
    Real a = at(i, prec).addend;
    if (a.sign() <= 0) throw DomainError("log of nonpositive term at index " + std::to_string(i));
    return log(a);
}

TermStream TermStream::constant(const Real& a, const Real& b, int sign) {
    TermStream s;
    s.generator = [a, b, sign](std::size_t i, Prec p) {
        return TermRecord(i, Real(a, p), Real(b, p), sign);
    };
    s.period = 1;
    s.description = "const:a=" + a.str(20);
    if (b != 1.0) s.description += ",b=" + b.str(20);
    return s;
}

TermStream TermStream::arithmetic(const Real& a0, const Real& da, const Real& b0, const Real& db) {
    TermStream s;
    s.generator = [a0, da, b0, db](std::size_t i, Prec p) {
        Real k(static_cast<long>(i), p);
        return TermRecord(i, Real(a0, p) + Real(da, p) * k, Real(b0, p) + Real(db, p) * k);
    };
    if (da.is_zero() && db.is_zero()) s.period = 1;
    s.description = "arith:start=" + a0.str(20) + ",step=" + da.str(20) + ",bstart=" + b0.str(20) +
                    ",bstep=" + db.str(20);
    return s;
}

TermStream TermStream::periodic_signs(const Real& a, std::vector<int> inner_signs, const Real& b) {
    if (inner_signs.empty()) throw DomainError("empty sign pattern");
    TermStream s;
    std::string pat;
    for (int v : inner_signs) pat += v < 0 ? '-' : '+';
    s.period = inner_signs.size();
    s.generator = [a, b, signs = std::move(inner_signs)](std::size_t i, Prec p) {
        int sg = signs[i % signs.size()] < 0 ? -1 : 1;
        return TermRecord(i, Real(a, p), Real(b, p) * static_cast<long>(sg));
    };
    s.description = "periodic:a=" + a.str(20) + ",signs=" + pat;
    return s;
}

TermStream TermStream::explicit_list(std::vector<Real> addends) {
    TermStream s;
    std::size_t n = addends.size();
    s.generator = [list = std::move(addends)](std::size_t i, Prec p) {
        if (i >= list.size())
            throw DomainError("explicit term list exhausted at index " + std::to_string(i));
        return TermRecord(i, Real(list[i], p), Real(1L, p));
    };
    s.description = "list:" + std::to_string(n) + " terms";
    return s;
}

TermStream TermStream::from_functions(std::function<Real(std::size_t, Prec)> addend,
                                      std::function<Real(std::size_t, Prec)> multiplier,
                                      std::string description) {
    TermStream s;
    s.generator = [addend, multiplier](std::size_t i, Prec p) {
        Real b = multiplier ? Real(multiplier(i, p), p) : Real(1L, p);
        return TermRecord(i, Real(addend(i, p), p), b);
    };
    s.description = std::move(description);
    return s;
}

Real default_seed(const CompositionKind& kind, Prec prec) {
    if (kind.reciprocal()) return Real::inf(prec);
    if (kind.family == Family::Logarithm) return Real(1L, prec);
    return Real(prec);
}

namespace {

bool odd_integer(double r) {
    double ip = 0;
    return std::modf(r, &ip) == 0.0 && std::fmod(ip, 2.0) != 0.0;
}

bool integral(double r) {
    double ip = 0;
    return std::modf(r, &ip) == 0.0 && std::fabs(ip) < 1e9;
}

std::string at_index(const TermRecord& t) { return " at level " + std::to_string(t.index); }

// y^(1/r) for the root kinds, real-signed for odd integer r.
Real real_root(const Real& y, const CompositionKind& kind, const TermRecord& t, Prec prec) {
    if (t.exponent) {
        const Real& e = *t.exponent;
        if (e <= 0.0 || e > 1.0) throw ExponentOutOfRange("root exponent outside (0,1]" + at_index(t));
        if (y.sign() < 0) throw DomainError("negative radicand" + at_index(t));
        return pow(Real(y, prec), Real(e, prec));
    }
    double r = kind.family == Family::SquareRoot ? 2.0 : kind.param;
    if (y.sign() < 0 && !odd_integer(r)) throw DomainError("negative radicand" + at_index(t));
    if (r == 2.0) return sqrt(y);
    if (integral(r)) return rootn(y, static_cast<unsigned long>(r));
    Real inv = Real(1L, prec) / Real(r, prec);
    return pow(y, inv);
}

Real checked(Real v, const TermRecord& t) {
    if (v.is_nan()) throw DomainError("undefined value" + at_index(t));
    if (v.is_inf()) throw OverflowError("intermediate overflow" + at_index(t));
    return v;
}

}  // namespace

Real apply_term(const CompositionKind& kind, const TermRecord& term, const Real& z_in, Prec prec) {
    if (term.sign != 1 && term.sign != -1) throw DomainError("sign must be +1 or -1");
    if (!term.addend.is_finite() || !term.multiplier.is_finite())
        throw DomainError("non-finite term" + at_index(term));
    Real z(z_in, prec);
    const Real& a = term.addend;
    const Real& b = term.multiplier;
    Real out(prec);
    switch (kind.family) {
        case Family::SquareRoot:
        case Family::RthRoot: {
            if (z.is_inf()) {
                if (!b.is_zero()) throw OverflowError("infinite argument to a root level" + at_index(term));
                z = Real(prec);
            }
            out = checked(real_root(a + b * z, kind, term, prec), term);
            break;
        }
        case Family::Power: {
            Real p = term.exponent ? Real(*term.exponent, prec) : Real(kind.param, prec);
            if (p < 1.0) throw ExponentOutOfRange("power exponent below 1" + at_index(term));
            if (z.is_inf()) {
                if (!b.is_zero()) throw OverflowError("infinite argument to a power level" + at_index(term));
                z = Real(prec);
            }
            if (z.sign() < 0 && !p.is_integer()) throw DomainError("negative base for fractional power" + at_index(term));
            out = checked(a + b * pow(z, p), term);
            break;
        }
        case Family::ReciprocalRoot: {
            Real e = term.exponent ? Real(*term.exponent, prec) : Real(1L, prec) / Real(kind.param, prec);
            if (e <= 0.0 || e >= 1.0) throw ExponentOutOfRange("reciprocal root exponent outside (0,1)" + at_index(term));
            if (z.is_inf()) {
                out = Real(a, prec);
            } else if (z.is_zero()) {
                if (b.is_zero()) out = Real(a, prec);
                else return Real::inf(prec, b.sign() * term.sign);
            } else {
                if (z.sign() < 0) throw DomainError("negative argument to a reciprocal root" + at_index(term));
                out = checked(a + b / pow(z, e), term);
            }
            break;
        }
        case Family::Fraction: {
            if (z.is_inf()) {
                out = Real(a, prec);
            } else if (z.is_zero()) {
                if (b.is_zero()) out = Real(a, prec);
                else return Real::inf(prec, b.sign() * term.sign);
            } else {
                out = checked(a + b / z, term);
            }
            break;
        }
        case Family::Cotangent: {
            if (z.is_inf()) {
                out = Real(a, prec);
            } else {
                Real den = z - a;
                if (den.is_zero()) throw DomainError("cotangent pole: argument equals term" + at_index(term));
                out = checked((a * z + 1L) / den, term);
            }
            break;
        }
        case Family::Logarithm: {
            if (z.is_inf()) throw OverflowError("infinite argument to a logarithm level" + at_index(term));
            if (z.sign() <= 0) throw DomainError("nonpositive logarithm argument" + at_index(term));
            Real lb = log(Real(kind.param, prec));
            out = checked(a + b * log(z) / lb, term);
            break;
        }
    }
    if (term.sign < 0) out = -out;
    return out;
}

namespace {

Real seed_of(const EvalRequest& req) {
    if (req.precision < kMinPrecision) throw DomainError("precision below 53 bits");
    return req.seed ? Real(*req.seed, req.precision) : default_seed(req.kind, req.precision);
}

}  // namespace

Real eval_backward(const EvalRequest& req) {
    Real x = seed_of(req);
    for (std::size_t k = req.depth + 1; k-- > 0;) {
        x = apply_term(req.kind, req.terms.at(k, req.precision), x, req.precision);
    }
    if (x.is_inf()) throw OverflowError("approximant is infinite");
    return x;
}

Real eval_forward(const EvalRequest& req) {
    Real u = seed_of(req);
    for (std::size_t k = 0; k <= req.depth; ++k) {
        u = apply_term(req.kind, req.terms.at(k, req.precision), u, req.precision);
    }
    if (u.is_inf()) throw OverflowError("iterate is infinite");
    return u;
}

LimitResult estimate_limit(const EvalRequest& req, const Real& tolerance, std::size_t max_depth,
                           Direction direction) {
    if (tolerance <= 0.0) throw DomainError("tolerance must be positive");
    if (max_depth < 2) throw DomainError("max_depth must be at least 2");
    const Prec prec = req.precision;
    ApproximantTrace trace;
    trace.tolerance_used = Real(tolerance, prec);
    trace.seed = seed_of(req);

    Real forward = trace.seed;
    std::size_t small_run = 0;
    for (std::size_t d = 0; d <= max_depth; ++d) {
        Real v(prec);
        try {
            if (direction == Direction::Backward) {
                EvalRequest r = req;
                r.depth = d;
                v = eval_backward(r);
            } else {
                forward = apply_term(req.kind, req.terms.at(d, prec), forward, prec);
                if (forward.is_inf()) throw OverflowError("iterate is infinite");
                v = forward;
            }
        } catch (const OverflowError& e) {
            throw NoConvergence(std::string("approximants diverge to infinity: ") + e.what(), std::move(trace));
        }
        Real delta = trace.values.empty() ? Real(prec) : abs(v - trace.values.back());
        trace.values.push_back(v);
        trace.deltas.push_back(delta);
        if (d == 0) continue;
        small_run = delta <= trace.tolerance_used ? small_run + 1 : 0;
        if (small_run >= 2) {
            trace.converged_at = d;
            return {trace.values.back(), std::move(trace)};
        }
    }
    throw NoConvergence("no two consecutive deltas within tolerance by depth " + std::to_string(max_depth),
                        std::move(trace));
}

Real closed_form_constant_sqrt(const Real& a) {
    if (!a.is_finite()) throw DomainError("term must be finite");
    if (a < -0.25) throw DomainError("real limit needs a >= -1/4; use the complex overload");
    return (sqrt(4L * a + 1L) + 1L) / 2L;
}

std::complex<double> closed_form_constant_sqrt(std::complex<double> a) {
    std::complex<double> d = 1.0 + 4.0 * a;
    if (d.imag() == 0.0) d = {d.real(), 0.0};  // -0 imaginary would select the lower branch
    return (1.0 + std::sqrt(d)) / 2.0;
}

}  // namespace ccomp
