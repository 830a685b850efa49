#pragma once

#include "ccomp/errors.hpp"
#include "ccomp/real.hpp"

#include <functional>
#include <string>
#include <utility>

namespace ccomp {

// A named partial product: factor(k) for k = 1..count.
struct ProductSpec {
    std::string name;
    std::function<Real(std::size_t k, Prec prec)> factor;
    Real target;
    std::size_t factor_count = 0;

    Real partial(std::size_t n, Prec prec) const;
};

// Product of sqrt(2)/2, sqrt(2 + sqrt 2)/2, ...; tends to 2/pi from above.
Real viete_product(std::size_t n_factors, Prec prec = kDefaultPrecision);

// 2^n sqrt(2 - R_{n-1}), R_j the all-plus nest of j twos, evaluated without
// subtracting nearby quantities.
Real catalan_pi(std::size_t n, Prec prec = kDefaultPrecision);

// 2^(n-1) sqrt(2 - R_{n-2}) / R_{n-1}; tends to pi/2.
Real candido_ratio(std::size_t n, Prec prec = kDefaultPrecision);

// Perimeter bounds of the inscribed and circumscribed 3*2^(q+1)-gons, written
// with the nest c_q = sqrt(2 + ... + sqrt(2 + sqrt 3)) of q roots.
std::pair<Real, Real> polygon_bounds_pi(std::size_t q, Prec prec = kDefaultPrecision);

// sin A / prod_{k=1..n} cos(A / 2^k); tends to A.
Real euler_secant_product(std::size_t n, const Real& A);

// First p factors of the half-angle radical product times the Wallis tail
// prod (2^(p+1) m - 1)(2^(p+1) m + 1) / (2^(p+1) m)^2, m = 1..wallis_terms.
Real osler_union_product(std::size_t p, std::size_t wallis_terms, Prec prec = kDefaultPrecision);

// f_1 = sqrt(1/2), f_{k+1} = sqrt(1/2 + 1/(2 f_k)); the product tends to 2/L.
Real levin_lemniscate_product(std::size_t n_factors, Prec prec = kDefaultPrecision);

// Lemniscate constant digits used as the target of the product above.
Real lemniscate_constant_reference(Prec prec = kDefaultPrecision);

// (x - 1) / (sqrt(x) prod F_k) with F_1 = sqrt((1 + c)/2), c = (1 + x)/(2 sqrt x).
Real osler_log_product(const Real& x, std::size_t n_factors);

// 2^n sqrt(R_n(5/2) - 2) where R_n(x) = sqrt(2 + ... + sqrt(2 + x)) has n roots.
Real hauser_ln2(std::size_t n, Prec prec = kDefaultPrecision);

ProductSpec viete_spec();
ProductSpec levin_spec();

}  // namespace ccomp
