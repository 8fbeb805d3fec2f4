#include "hbs/common/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hbs {

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("to_rational: non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent, |mantissa| in [0.5, 1)
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  boost::multiprecision::cpp_int numerator = scaled;
  boost::multiprecision::cpp_int denominator = 1;
  if (exponent >= 0)
    numerator <<= exponent;
  else
    denominator <<= -exponent;
  return Rational(numerator, denominator);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace hbs
