#pragma once

#include "ccomp/real.hpp"

#include <doctest.h>

#include <string>

namespace ccomp::testing {

inline Real R(const char* s, Prec prec = kDefaultPrecision) { return Real(std::string_view(s), prec); }
inline Real R(long v, Prec prec = kDefaultPrecision) { return Real(v, prec); }
inline Real R(int v, Prec prec = kDefaultPrecision) { return Real(static_cast<long>(v), prec); }

inline double err(const Real& a, const Real& b) { return abs(a - b).to_double(); }

}  // namespace ccomp::testing

#define CHECK_NEAR(a, b, tol)                                                                    \
    do {                                                                                         \
        const double ccomp_e_ = ::ccomp::testing::err((a), (b));                                 \
        INFO("lhs=" << (a).str(25) << " rhs=" << (b).str(25) << " err=" << ccomp_e_);            \
        CHECK(ccomp_e_ <= (tol));                                                                \
    } while (0)
