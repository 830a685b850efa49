#include "ccomp/criteria.hpp"

#include <cmath>
#include <numbers>

namespace ccomp {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Converges: return "Converges";
        case Verdict::Diverges: return "Diverges";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const Real* ConvergenceReport::extra(const std::string& key) const {
    for (const auto& [k, v] : extras)
        if (k == key) return &v;
    return nullptr;
}

namespace {

void require_depth(std::size_t N) {
    if (N < 8) throw DomainError("sample depth N must be at least 8");
}

Real neg_inf(Prec prec) { return Real::inf(prec, -1); }

// log a_n for a nonnegative stream, -inf for zero terms.
Real log_term(const TermStream& terms, std::size_t n, Prec prec) {
    if (terms.log_addend) return terms.log_addend(n, prec);
    Real a = terms.at(n, prec).addend;
    if (a.sign() < 0) throw NegativeTerm("negative addend at index " + std::to_string(n));
    if (a.is_zero()) return neg_inf(prec);
    return log(a);
}

Real max_over(const std::vector<Real>& v, std::size_t lo, std::size_t hi, Prec prec) {
    Real m = neg_inf(prec);
    for (std::size_t i = lo; i < hi; ++i)
        if (v[i] > m) m = v[i];
    return m;
}

// Bounded-envelope classification of a log-statistic sampled on [0, N).
// Converges when the last quarter never rises above the third quarter by more
// than the band; Diverges when the statistic is positive and grows by a
// nondecreasing factor above 1 + band at every step of the tail half.
Verdict envelope_verdict(const std::vector<Real>& L, Prec prec, std::string& notes) {
    const std::size_t N = L.size();
    const std::size_t half = N / 2, three = (3 * N) / 4;
    const Real band(std::log1p(kVerdictBand), prec);

    Real third = max_over(L, half, three, prec);
    Real last = max_over(L, three, N, prec);
    if (last.is_inf() && last.sign() < 0) {
        notes = "tail terms vanish";
        return Verdict::Converges;
    }
    if (!third.is_inf() && last <= third + band) {
        notes = "tail envelope bounded and not rising";
        return Verdict::Converges;
    }

    bool growing = true;
    Real prev_step(prec);
    for (std::size_t n = half; n + 1 < N && growing; ++n) {
        if (!L[n].is_finite() || L[n].sign() <= 0) { growing = false; break; }
        Real step = L[n + 1] - L[n];
        if (step <= band) growing = false;
        else if (n > half && step < prev_step * Real(1.0 - kVerdictBand, prec)) growing = false;
        prev_step = step;
    }
    if (growing) {
        notes = "sustained geometric growth over the tail half";
        return Verdict::Diverges;
    }
    notes = "tail envelope neither settled nor growing geometrically";
    return Verdict::Inconclusive;
}

// Three-way threshold comparison with the relative undecided band.
Verdict threshold_verdict(const Real& stat, const Real& lo, const Real& hi, Prec prec) {
    const Real below(1.0 - kVerdictBand, prec), above(1.0 + kVerdictBand, prec);
    auto scaled = [&](const Real& t, const Real& f) { return t.sign() >= 0 ? t * f : t * (2L - f); };
    if (stat < scaled(lo, below)) return Verdict::Converges;
    if (stat > scaled(hi, above)) return Verdict::Diverges;
    return Verdict::Inconclusive;
}

ConvergenceReport make_report(std::string criterion, std::size_t N) {
    ConvergenceReport r;
    r.criterion = std::move(criterion);
    r.sample_depth = N;
    return r;
}

// Tail max of log(log a_n)/n over terms above 1, plus a count of such terms.
Real loglog_statistic(const TermStream& terms, std::size_t N, Prec prec, std::size_t& counted) {
    counted = 0;
    Real best = neg_inf(prec);
    for (std::size_t n = std::max<std::size_t>(1, N / 2); n < N; ++n) {
        Real la = log_term(terms, n, prec);
        if (!(la.sign() > 0)) continue;
        ++counted;
        Real s = log(la) / static_cast<long>(n);
        if (s > best) best = s;
    }
    return best;
}

Real exp_or_zero(const Real& l) { return l.is_inf() && l.sign() < 0 ? Real(l.prec()) : exp(l); }

}  // namespace

ConvergenceReport herschfeld_vijayaraghavan(const TermStream& terms, std::size_t N, Prec prec) {
    require_depth(N);
    auto rep = make_report("herschfeld_vijayaraghavan", N);
    std::vector<Real> L;
    for (std::size_t n = 0; n < N; ++n) L.push_back(ldexp(log_term(terms, n, prec), -static_cast<long>(n)));
    rep.verdict = envelope_verdict(L, prec, rep.notes);
    rep.statistic = exp_or_zero(max_over(L, N / 2, N, prec));
    return rep;
}

ConvergenceReport polya_loglog(const TermStream& terms, std::size_t N, Prec prec) {
    require_depth(N);
    auto rep = make_report("polya_loglog", N);
    std::size_t counted = 0;
    rep.statistic = loglog_statistic(terms, N, prec, counted);
    if (counted == 0) {
        rep.verdict = Verdict::Converges;
        rep.notes = "no tail term exceeds 1";
        return rep;
    }
    Real ln2 = Real::ln2(prec);
    rep.verdict = threshold_verdict(rep.statistic, ln2, ln2, prec);
    rep.notes = "threshold log 2";
    return rep;
}

ConvergenceReport polya_szego_series_test(const TermStream& terms, std::size_t N, Prec prec) {
    require_depth(N);
    auto rep = make_report("polya_szego_series", N);
    Real log_prod(prec), sum(prec), at_half(prec);
    const Real ln2 = Real::ln2(prec);
    for (std::size_t n = 1; n <= N; ++n) {
        Real la = log_term(terms, n - 1, prec);
        if (la.is_inf()) throw DomainError("series test needs positive addends");
        log_prod += la;
        Real lu = la - ln2 * static_cast<long>(n) - ldexp(log_prod, -1);
        sum += exp(lu);
        if (n == N / 2) at_half = sum;
    }
    rep.statistic = sum;
    Real gap = abs(sum - at_half);
    if (sum.is_finite() && gap <= Real(kVerdictBand, prec) * (abs(sum) + 1L)) {
        rep.verdict = Verdict::Converges;
        rep.notes = "partial sums settled over the tail half";
    } else {
        rep.notes = "partial sums not settled; the test is sufficient only";
    }
    return rep;
}

ConvergenceReport herschfeld_theorem3(const TermStream& terms, std::size_t N, double default_exponent, Prec prec) {
    require_depth(N);
    auto rep = make_report("herschfeld_theorem3", N);
    std::vector<Real> L;
    Real log_product(prec);  // log(r_0 r_1 ... r_{n-1})
    Real worst_ratio(prec);
    for (std::size_t n = 0; n < N; ++n) {
        TermRecord t = terms.at(n, prec);
        Real e = t.exponent ? Real(*t.exponent, prec) : Real(default_exponent, prec);
        if (e <= 0.0 || e > 1.0) throw ExponentOutOfRange("exponent outside (0,1] at index " + std::to_string(n));
        L.push_back(exp(log_product) * log_term(terms, n, prec));
        log_product += log(e);
        if (n >= N / 2 && e > worst_ratio) worst_ratio = e;
    }
    rep.extras.emplace_back("max_tail_exponent", worst_ratio);
    rep.statistic = exp_or_zero(max_over(L, N / 2, N, prec));
    if (!(worst_ratio < 1.0 - kVerdictBand)) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes = "exponent product series not shown convergent; theorem inapplicable";
        return rep;
    }
    rep.verdict = envelope_verdict(L, prec, rep.notes);
    if (rep.verdict == Verdict::Diverges) rep.notes += "; divergence per stated theorem";
    return rep;
}

ConvergenceReport andrushkiw(const TermStream& terms, std::size_t N, double default_root, Prec prec) {
    require_depth(N);
    auto rep = make_report("andrushkiw", N);
    Real r_lo = Real::inf(prec), r_hi = neg_inf(prec);
    bool all_unit = true;
    for (std::size_t n = 0; n < N; ++n) {
        TermRecord t = terms.at(n, prec);
        Real root = t.exponent ? Real(1L, prec) / *t.exponent : Real(default_root, prec);
        if (root <= 1.0) throw ExponentOutOfRange("root index must exceed 1 at index " + std::to_string(n));
        if (n >= N / 2) {
            r_lo = min(r_lo, root);
            r_hi = max(r_hi, root);
        }
        Real la = log_term(terms, n, prec);
        if (la.sign() > 0) all_unit = false;
    }
    rep.extras.emplace_back("r", r_lo);
    rep.extras.emplace_back("R", r_hi);
    std::size_t counted = 0;
    rep.statistic = loglog_statistic(terms, N, prec, counted);
    if (all_unit) {
        rep.verdict = Verdict::Converges;
        rep.notes = "every sampled term lies in [0,1]";
        return rep;
    }
    if (counted == 0) {
        rep.verdict = Verdict::Converges;
        rep.notes = "no tail term exceeds 1";
        return rep;
    }
    rep.verdict = threshold_verdict(rep.statistic, log(r_lo), log(r_hi), prec);
    rep.notes = rep.verdict == Verdict::Inconclusive ? "alpha between log r and log R" : "alpha outside [log r, log R]";
    return rep;
}

Real jones_power_radius(const Real& p) {
    if (!(p > 1.0)) throw DomainError("power must exceed 1");
    Real pm = p - 1L;
    Real t = pow(pm, pm) / pow(p, p);
    return pow(t, Real(1L, p.prec()) / pm);
}

ConvergenceReport jones_power_tests(const TermStream& terms, const Real& p_in, std::size_t N, Prec prec) {
    require_depth(N);
    Real p(p_in, prec);
    const Real R = jones_power_radius(p);
    const Real ratio_bound = pow(p - 1L, p - 1L) / pow(p, p);
    std::vector<Real> a;
    for (std::size_t n = 0; n < N; ++n) {
        Real v = terms.at(n, prec).addend;
        if (v.sign() < 0) throw NegativeTerm("negative addend at index " + std::to_string(n));
        a.push_back(v);
    }
    Real hi = neg_inf(prec), lo = Real::inf(prec);
    for (std::size_t n = N / 2; n < N; ++n) {
        hi = max(hi, a[n]);
        lo = min(lo, a[n]);
    }
    const Real below(1.0 - kVerdictBand, prec), above(1.0 + kVerdictBand, prec);
    ConvergenceReport rep = make_report("jones_power", N);
    rep.extras.emplace_back("R", R);
    if (hi < R * below) {
        rep.verdict = Verdict::Converges;
        rep.statistic = hi;
        rep.notes = "limsup below the radius";
        return rep;
    }
    if (lo > R * above) {
        rep.verdict = Verdict::Diverges;
        rep.statistic = lo;
        rep.notes = "liminf above the radius";
        return rep;
    }

    bool ratio_ok = true;
    Real worst = neg_inf(prec);
    for (std::size_t n = N / 2; n + 1 < N; ++n) {
        if (a[n].is_zero()) {
            if (!a[n + 1].is_zero()) ratio_ok = false;
            continue;
        }
        Real q = pow(a[n + 1], p) / a[n];
        worst = max(worst, q);
    }
    if (ratio_ok && worst < ratio_bound * below) {
        rep.verdict = Verdict::Converges;
        rep.statistic = worst;
        rep.notes = "ratio test";
        return rep;
    }

    std::vector<Real> L;
    for (std::size_t n = 0; n < N; ++n) {
        Real l = a[n].is_zero() ? neg_inf(prec) : pow(p, static_cast<long>(n)) * log(a[n] / R);
        L.push_back(l);
    }
    std::string env_notes;
    Verdict v = envelope_verdict(L, prec, env_notes);
    rep.statistic = exp_or_zero(max_over(L, N / 2, N, prec));
    if (v == Verdict::Converges) {
        rep.verdict = Verdict::Converges;
        rep.notes = "(a_n/R)^(p^n) bounded";
    } else {
        rep.verdict = Verdict::Inconclusive;
        rep.notes = "no test decisive";
    }
    return rep;
}

ConvergenceReport jones_reciprocal_root(const TermStream& terms, const Real& r, std::size_t N, Prec prec) {
    require_depth(N);
    if (!(r > 1.0)) throw DomainError("root index must exceed 1");
    auto rep = make_report("jones_reciprocal_root", N);
    const Real p = Real(1L, prec) / Real(r, prec);
    Real best = neg_inf(prec);
    for (std::size_t n = N / 2; n < N; ++n) {
        Real l = pow(p, static_cast<long>(n)) * log_term(terms, n, prec);
        best = max(best, l);
    }
    rep.statistic = exp_or_zero(best);
    // A statistic that reaches 1 is never below 1, so only the band below 1 is undecided.
    if (best.sign() >= 0) {
        rep.verdict = Verdict::Converges;
        rep.notes = "limsup of a_i^(p^i) is at least 1";
    } else if (best < Real(std::log1p(-kVerdictBand), prec)) {
        rep.verdict = Verdict::Diverges;
        rep.notes = "limsup of a_i^(p^i) below 1";
    } else {
        rep.notes = "statistic within the band below 1";
    }
    return rep;
}

MonotoneMapSpec MonotoneMapSpec::square_root() {
    MonotoneMapSpec m;
    m.f = [](const Real& x) { return sqrt(x); };
    m.log_iterate = [](std::size_t n, const Real& lp) { return ldexp(lp, -static_cast<long>(n)); };
    m.increasing = true;
    m.sublinear = true;
    m.name = "sqrt";
    return m;
}

ConvergenceReport laugwitz_general(const MonotoneMapSpec& map, const TermStream& terms, std::size_t N, Prec prec) {
    if (!map.increasing || !map.sublinear)
        throw HypothesisNotCertified("map '" + map.name + "' lacks certified monotonicity and sublinearity");
    if (!map.f && !map.log_iterate) throw DomainError("map has neither f nor log_iterate");
    require_depth(N);
    auto rep = make_report("laugwitz", N);
    std::vector<Real> L;
    for (std::size_t n = 0; n < N; ++n) {
        if (map.log_iterate) {
            L.push_back(map.log_iterate(n, log_term(terms, n, prec)));
            continue;
        }
        Real x = terms.at(n, prec).addend;
        for (std::size_t k = 0; k < n; ++k) x = map.f(x);
        L.push_back(x.sign() > 0 ? log(x) : neg_inf(prec));
    }
    rep.verdict = envelope_verdict(L, prec, rep.notes);
    rep.statistic = exp_or_zero(max_over(L, N / 2, N, prec));
    return rep;
}

double RegionSpec::upper_arg() const {
    constexpr double pi = std::numbers::pi;
    return theta <= 2.0 * pi / 3.0 ? pi - theta / 2.0 : 2.0 * (pi - theta);
}

bool RegionSpec::valid() const {
    return theta > 0.0 && theta < std::numbers::pi && epsilon > 0.0 && epsilon < std::min(theta, upper_arg());
}

bool RegionSpec::contains(std::complex<double> a) const {
    if (std::abs(a) == 0.0) return false;
    double arg = std::arg(a);
    return arg > -theta + epsilon && arg < upper_arg() - epsilon;
}

ComplexTermStream ComplexTermStream::constant(std::complex<double> a) {
    return {[a](std::size_t) { return a; }, nullptr};
}

ConvergenceReport schuske_thron_region(const RegionSpec& region, const ComplexTermStream& terms, std::size_t N) {
    if (!region.valid()) throw DomainError("region needs 0 < theta < pi and 0 < epsilon < min(theta, g(theta))");
    require_depth(N);
    const Prec prec = 64;
    auto rep = make_report("schuske_thron", N);
    std::vector<Real> L;
    for (std::size_t n = 0; n < N; ++n) {
        std::complex<double> a = terms.term(n);
        if (!region.contains(a)) {
            rep.verdict = Verdict::Inconclusive;
            rep.offending_index = n;
            rep.statistic = Real(std::arg(a), prec);
            rep.notes = "membership failure at index " + std::to_string(n);
            return rep;
        }
        double lm = terms.log_modulus ? terms.log_modulus(n) : std::log(std::abs(a));
        L.push_back(ldexp(Real(lm, prec), -static_cast<long>(n)));
    }
    std::string env;
    Verdict v = envelope_verdict(L, prec, env);
    rep.statistic = exp_or_zero(max_over(L, N / 2, N, prec));
    rep.verdict = v == Verdict::Converges ? Verdict::Converges : Verdict::Inconclusive;
    rep.notes = "all terms in the region; modulus " + env;
    return rep;
}

Real central_difference(const std::function<Real(const Real&)>& f, const Real& x, Prec prec) {
    Real h = ldexp(Real(1L, prec), -static_cast<long>(prec / 3)) * max(Real(1L, prec), abs(x));
    Real xp = Real(x, prec) + h, xm = Real(x, prec) - h;
    return (f(xp) - f(xm)) / (2L * h);
}

ConvergenceReport isenkrahe_fixed_point(const DifferentiableMapSpec& map, const Real& guess, Prec prec,
                                        std::size_t max_iter) {
    if (!map.f) throw DomainError("map value function missing");
    auto deriv = [&](const Real& x) { return map.df ? Real(map.df(x), prec) : central_difference(map.f, x, prec); };
    auto rep = make_report("isenkrahe", max_iter);
    // Fixed point of f located with the transformed map x - (f(x) - x)/(f'(x) - 1),
    // which is attracting for repelling fixed points of f as well.
    Real x(guess, prec);
    const Real tol = ldexp(Real(1L, prec), -static_cast<long>(prec) + 8);
    bool located = false;
    std::size_t it = 0;
    for (; it < max_iter; ++it) {
        Real fx = map.f(x);
        if (!fx.is_finite()) break;
        Real g = fx - x;
        Real dg = deriv(x) - 1L;
        if (dg.is_zero() || !dg.is_finite()) break;
        Real step = g / dg;
        x -= step;
        if (abs(step) <= tol * max(Real(1L, prec), abs(x))) {
            located = true;
            break;
        }
    }
    if (!located) throw NoFixedPointLocated("no fixed point located from guess " + guess.str(12));
    Real d = deriv(x);
    rep.sample_depth = it + 1;
    rep.statistic = abs(d);
    rep.extras.emplace_back("root", x);
    rep.extras.emplace_back("derivative", d);
    if (rep.statistic < 1.0 - kVerdictBand) rep.verdict = Verdict::Converges;
    else if (rep.statistic > 1.0 + kVerdictBand) rep.verdict = Verdict::Diverges;
    std::string side = d.sign() > 0 ? "monotone" : d.sign() < 0 ? "oscillating" : "superlinear";
    rep.notes = side + " approach";
    return rep;
}

}  // namespace ccomp
