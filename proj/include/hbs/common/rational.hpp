#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hbs {

/// Arbitrary precision rational used for exact knot-insertion coefficients
/// and partition-of-unity weights.
using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion. Every finite double is a dyadic rational m * 2^e, so
/// nothing is lost here; throws std::domain_error for inf/nan.
Rational to_rational(double x);

/// Nearest double.
double to_double(const Rational& r);

}  // namespace hbs
