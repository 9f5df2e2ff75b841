#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ratdiag/rational.hpp"

namespace ratdiag {

// Extended-precision real scalar (50 decimal digits, ~166 bits) used for
// every quantity that leaves the rational world: logarithms, square roots,
// asymptotic constants. Control flow must never depend on Real rounding;
// exact comparisons stay in Rational/Int.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

Real to_real(const Int& n);
Real to_real(const Rational& r);

std::string format_real(const Real& x, int significant_digits = 12);

} // namespace ratdiag
