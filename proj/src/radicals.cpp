#include "ccomp/radicals.hpp"

#include <algorithm>

namespace ccomp {

int SignSequence::at(std::size_t i) const {
    if (signs.empty()) throw DomainError("empty sign sequence");
    if (i < signs.size()) return signs[i] < 0 ? -1 : 1;
    if (!periodic_tail) throw DomainError("sign sequence too short for depth " + std::to_string(i));
    auto [pre, period] = *periodic_tail;
    if (period == 0 || pre + period > signs.size()) throw DomainError("invalid periodic tail");
    return at(pre + (i - pre) % period);
}

std::string SignSequence::str() const {
    std::string s;
    for (int v : signs) s += v < 0 ? '-' : '+';
    return s;
}

Real nyblom_closed_form(const Real& x, unsigned k, NyblomVariant variant) {
    if (x < 2.0) throw DomainError("closed form needs x >= 2");
    if (k == 0) throw DomainError("k must be positive");
    const Prec prec = x.prec();
    Real phi = (x + sqrt(x * x - 4L)) / 2L;
    Real e = ldexp(log(phi), -static_cast<long>(k));  // log(phi) / 2^k
    Real up = exp(e);
    Real down = exp(-e);
    if (variant == NyblomVariant::Plus) return up + down;
    // up - down = 2 sinh(e), kept free of cancellation for small e.
    Real s(prec);
    mpfr_sinh(s.raw(), e.raw(), MPFR_RNDN);
    return 2L * s;
}

Real nyblom_direct(const Real& x, unsigned k, NyblomVariant variant) {
    if (k == 0) throw DomainError("k must be positive");
    const Prec prec = x.prec();
    EvalRequest req{CompositionKind::square_root(), TermStream::constant(Real(2L, prec)), 0, x, prec};
    if (variant == NyblomVariant::Plus) {
        req.depth = k - 1;
        return eval_backward(req);
    }
    Real inner = k == 1 ? Real(x, prec) : (req.depth = k - 2, eval_backward(req));
    Real r = inner - 2L;
    if (r.sign() < 0) throw DomainError("negative radicand in the minus variant");
    return sqrt(r);
}

SignNestValue sign_nest_value(const SignSequence& signs, std::size_t depth, Prec prec) {
    const Real two(2L, prec);
    Real z(prec);
    for (std::size_t k = depth + 1; k-- > 0;) {
        Real r = two + z;
        if (r.sign() < 0) throw DomainError("negative radicand at level " + std::to_string(k));
        z = sqrt(r);
        if (signs.at(k) < 0) z = -z;
    }
    Real sum(prec);
    int prod = 1;
    for (std::size_t k = 0; k <= depth; ++k) {
        prod *= signs.at(k);
        sum += ldexp(Real(static_cast<long>(prod), prec), -static_cast<long>(k));
    }
    Real series = two * sin(Real::pi(prec) / 4L * sum);
    return {z, series};
}

SignSequence encode_sign_nest(const Real& x, std::size_t depth) {
    if (!(abs(x) <= 2.0)) throw DomainError("x must lie in [-2, 2]");
    const Prec prec = std::max<Prec>(x.prec(), static_cast<Prec>(depth) + 64);
    // x = 2 sin(pi/4 * S) with S = sum P_k 2^-k, P_k = e_0...e_k.
    Real rest = asin(Real(x, prec) / 2L) * 4L / Real::pi(prec);
    SignSequence out;
    int prev = 1;
    for (std::size_t k = 0; k <= depth; ++k) {
        int p = rest.sign() >= 0 ? 1 : -1;
        rest -= ldexp(Real(static_cast<long>(p), prec), -static_cast<long>(k));
        out.signs.push_back(k == 0 ? p : p * prev);
        prev = p;
    }
    return out;
}

std::optional<std::pair<std::size_t, std::size_t>> detect_sign_periodicity(const SignSequence& seq,
                                                                           std::size_t max_period) {
    const auto& s = seq.signs;
    const std::size_t len = s.size();
    if (max_period == 0) return std::nullopt;
    // Every candidate must be confirmed on at least 2*max_period comparisons.
    const std::size_t needed = 2 * max_period;
    for (std::size_t pre = 0; pre + needed < len; ++pre) {
        for (std::size_t period = 1; period <= max_period; ++period) {
            if (pre + period + needed > len) break;
            bool ok = true;
            for (std::size_t i = pre; i + period < len && ok; ++i) ok = s[i] == s[i + period];
            if (ok) return std::make_pair(pre, period);
        }
    }
    return std::nullopt;
}

SizerDigits sizer_encode(const Real& x, std::size_t depth) {
    if (!x.is_finite() || x.sign() < 0) throw DomainError("x must be finite and nonnegative");
    const Prec prec = std::max<Prec>(x.prec(), 2 * static_cast<Prec>(depth) + 64);
    Real sq = Real(x, prec) * Real(x, prec);
    // head = max(0, ceil(x^2) - 2) keeps the residual in (0, 2], so x = 2 has the all-2 tail.
    Real c(prec);
    mpfr_ceil(c.raw(), sq.raw());
    Real h = c - 2L;
    if (h.sign() < 0) h = Real(prec);
    SizerDigits d;
    d.head = h.to_mpz();
    Real y = sq - h;
    for (std::size_t i = 0; i < depth; ++i) {
        Real y2 = y * y;
        long a = floor(y2).to_long();
        a = std::clamp(a, 0L, 2L);
        d.tail.push_back(static_cast<int>(a));
        y = y2 - a;
        if (y.sign() < 0) y = Real(prec);
    }
    d.residual = y;
    return d;
}

Real sizer_decode(const SizerDigits& d) {
    for (int t : d.tail)
        if (t < 0 || t > 2) throw DomainError("Sizer tail digits must be 0, 1 or 2");
    if (d.head < 0) throw DomainError("Sizer head must be nonnegative");
    const Prec prec = std::max<Prec>(d.residual.prec(), kDefaultPrecision);
    std::vector<Real> addends{Real(d.head, prec)};
    for (int t : d.tail) addends.emplace_back(static_cast<long>(t), prec);
    EvalRequest req{CompositionKind::square_root(), TermStream::explicit_list(std::move(addends)), d.tail.size(),
                    d.residual, prec};
    return eval_backward(req);
}

std::vector<int> nonterminating_binary_digits(const Real& x, std::size_t count) {
    if (!(x > 0.0) || x > 1.0) throw DomainError("x must lie in (0, 1]");
    Real y(x, std::max<Prec>(x.prec(), static_cast<Prec>(count) + 64));
    std::vector<int> out;
    for (std::size_t i = 0; i < count; ++i) {
        y = ldexp(y, 1);
        if (y > 1.0) {
            out.push_back(1);
            y -= Real(1L, y.prec());
        } else {
            out.push_back(0);
        }
    }
    return out;
}

Real binary_signed_nest(const Real& x, const Real& k, std::size_t depth) {
    const Prec prec = std::max<Prec>(k.prec(), kDefaultPrecision);
    Real bound = sqrt(Real(2L, prec)) + 2L;
    if (!(Real(k, prec) > bound)) throw DomainError("limit existence needs k > 2 + sqrt(2)");
    std::vector<int> digits = nonterminating_binary_digits(x, depth + 1);
    TermStream terms = TermStream::from_functions(
        [k](std::size_t, Prec p) { return Real(k, p); },
        [digits](std::size_t i, Prec p) { return Real(digits[i] ? -1L : 1L, p); }, "binary-signed");
    EvalRequest req{CompositionKind::square_root(), terms, depth, Real(prec), prec};
    return eval_backward(req);
}

}  // namespace ccomp
