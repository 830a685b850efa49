#pragma once

#include "ccomp/errors.hpp"
#include "ccomp/real.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ccomp {

struct NamedConstant {
    std::string name;
    std::string reference_digits;
    std::string provenance;
    std::string citation;
    std::function<Real(Prec)> compute;
};

const std::vector<NamedConstant>& constant_registry();
const NamedConstant& find_constant(const std::string& name);  // UnknownConstant
Real compute_constant(const std::string& name, Prec prec = kDefaultPrecision);

// Building blocks, each by its defining procedure.
Real kasner_number(Prec prec);
Real paris_constant(Prec prec);
// (theta - u_n)(2 theta)^n / 2 for the all-ones nest u_1 = 1, u_{k+1} = sqrt(1 + u_k).
std::vector<Real> paris_sequence(std::size_t n, Prec prec);
Real plastic_constant(Prec prec);
Real golden_ratio(Prec prec);
Real dence_k0(Prec prec);
Real dence_a0(Prec prec);
Real lim2007_constant(Prec prec);
Real lim2008_m(Prec prec);
Real lim2008_n(Prec prec);
Real somos_constant(Prec prec, long t = 2);

// |x - N(x)| where N(x) is the continued root that defines each Lim constant:
// (1 + y)^(1/x) for lim2007, (x + x y)^(1/x) for lim2008_m and lim2008_n.
Real lim_nest_residual(const std::string& name, Prec prec);

// Bisection for a sign change of g on [lo, hi], to 2^-prec relative width.
Real bisect(const std::function<Real(const Real&)>& g, Real lo, Real hi);

}  // namespace ccomp
