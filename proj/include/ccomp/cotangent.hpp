#pragma once

#include "ccomp/errors.hpp"
#include "ccomp/real.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ccomp {

// x = cot(arccot a_0 - arccot a_1 + arccot a_2 - ...).
struct CotangentDigits {
    std::vector<mpz_class> digits;
    bool terminated = false;
    Real residual;  // x_k after the last emitted digit (+inf when terminated)
};

// Working precision used by cot_encode for a given digit budget.
Prec cot_working_precision(std::size_t max_digits, Prec input_prec);

// Expands the exact value of x (at its own precision). Rounding in the digit
// map is tracked with outward-rounded bounds; PrecisionExhausted is raised
// as soon as the bounds straddle an integer.
CotangentDigits cot_encode(const Real& x, std::size_t max_digits);

struct CotangentValue {
    Real value;   // backward composition of (a x + 1)/(x - a)
    Real arccot;  // cot of the alternating arccot sum
};

// Uses digits[0..depth); the innermost level returns its own digit.
CotangentValue cot_decode_both(const CotangentDigits& d, std::size_t depth, Prec prec = kDefaultPrecision);
Real cot_decode(const CotangentDigits& d, std::size_t depth, Prec prec = kDefaultPrecision);

// 0, 1, 3, 13, 183, ...: a_{k+1} = a_k^2 + a_k + 1.
std::vector<mpz_class> lehmer_digits(std::size_t n);
Real lehmer_constant(std::size_t n_digits, Prec prec = kDefaultPrecision);

bool check_regular(const CotangentDigits& d);
bool check_regular(const std::vector<mpz_class>& digits);

// One integer per line, then "residual <value>" or "terminated".
std::string dump_digits(const std::vector<mpz_class>& digits, const Real* residual, bool terminated);

}  // namespace ccomp
