#pragma once

#include "ccomp/errors.hpp"
#include "ccomp/real.hpp"

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ccomp {

enum class FDirection { Decreasing, Increasing };

// x = f(a_1 + f(a_2 + f(a_3 + ...))). Decreasing systems normalize f(1) = 1,
// f(inf) = 0; increasing systems map [0, p] onto [0, 1].
struct FExpansionSystem {
    std::string name;
    FDirection direction = FDirection::Decreasing;
    std::function<Real(const Real&)> f;
    std::function<Real(const Real&)> f_inverse;
    Real domain_lo, domain_hi;  // closed at lo for increasing systems, open otherwise
    std::optional<long> digit_max;

    bool in_domain(const Real& x) const;

    static FExpansionSystem reciprocal();        // f(t) = 1/t: simple continued fractions
    static FExpansionSystem radix(long p);        // f(t) = t/p: base-p digits
};

struct FDigits {
    std::vector<mpz_class> digits;
    Real residual;  // f(a_{n+1} + ...), in [0, 1)
    bool terminated = false;
};

FDigits f_encode(const FExpansionSystem& sys, const Real& x, std::size_t n);

// f(a_1 + f(a_2 + ... + f(a_depth + s))) with s the stored residual when all
// digits are used and 0 otherwise.
Real f_decode(const FExpansionSystem& sys, const FDigits& d, std::size_t depth);

// Exact continued-fraction digits of num/den in (0, 1] under f(t) = 1/t.
FDigits reciprocal_encode_ratio(const mpz_class& num, const mpz_class& den, std::size_t n, Prec prec = kDefaultPrecision);

// Greedy expansion x = sum d_i beta^-i.
FDigits beta_encode(const Real& beta, const Real& x, std::size_t n);
Real beta_value(const Real& beta, const std::vector<mpz_class>& digits);

}  // namespace ccomp
