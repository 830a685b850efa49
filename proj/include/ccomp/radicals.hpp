#pragma once

#include "ccomp/engine.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ccomp {

// Signs e_0, e_1, ... of e_0 sqrt(2 + e_1 sqrt(2 + ...)). An optional
// (preperiod, period) tail extends the list periodically.
struct SignSequence {
    std::vector<int> signs;
    std::optional<std::pair<std::size_t, std::size_t>> periodic_tail;

    int at(std::size_t i) const;
    std::string str() const;
};

enum class NyblomVariant { Plus, Minus };

// phi^(1/2^k) +- phi^(-1/2^k) with phi = (x + sqrt(x^2 - 4))/2: the value of the
// k-root nest sqrt(2 + ... + sqrt(2 + x)) and of its "-2" outer variant.
Real nyblom_closed_form(const Real& x, unsigned k, NyblomVariant variant);

// The same nests evaluated level by level through the engine.
Real nyblom_direct(const Real& x, unsigned k, NyblomVariant variant);

struct SignNestValue {
    Real direct;  // e_0 sqrt(2 + e_1 sqrt(2 + ... + e_n sqrt 2))
    Real series;  // 2 sin(pi/4 * sum_k e_0...e_k / 2^k)
};

SignNestValue sign_nest_value(const SignSequence& signs, std::size_t depth, Prec prec = kDefaultPrecision);

// Signs e_0..e_depth whose nest approximates x in [-2, 2].
SignSequence encode_sign_nest(const Real& x, std::size_t depth);

std::optional<std::pair<std::size_t, std::size_t>> detect_sign_periodicity(const SignSequence& signs,
                                                                           std::size_t max_period);

// x = sqrt(head + sqrt(t_1 + sqrt(t_2 + ... + sqrt(t_n + residual)))), t_i in {0,1,2}.
struct SizerDigits {
    mpz_class head;
    std::vector<int> tail;
    Real residual;
};

SizerDigits sizer_encode(const Real& x, std::size_t depth);
Real sizer_decode(const SizerDigits& d);

// Binary digits of x in (0,1] from the nonterminating expansion.
std::vector<int> nonterminating_binary_digits(const Real& x, std::size_t count);

// sqrt(k + s_1 sqrt(k + s_2 sqrt(k + ... + s_n sqrt k))) with s_i = (-1)^(digit i of x).
Real binary_signed_nest(const Real& x, const Real& k, std::size_t depth);

}  // namespace ccomp
