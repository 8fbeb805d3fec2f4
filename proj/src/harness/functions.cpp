#include "hbs/harness/functions.hpp"

#include <boost/math/special_functions/hermite.hpp>
#include <cmath>
#include <numbers>

#include "hbs/common/errors.hpp"

namespace hbs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSigma = 0.2;

/// s-th derivative of x -> x^k / (k + 1) summed over k <= p.
double poly_factor(int p, int s, double x) {
  double v = 0.0;
  for (int k = s; k <= p; ++k) {
    double c = 1.0 / (k + 1);
    for (int j = 0; j < s; ++j) c *= k - j;
    v += c * std::pow(x, k - s);
  }
  return v;
}

/// s-th derivative of x -> exp(-(x - 1/2)^2 / (2 sigma^2)), through the
/// physicists' Hermite polynomials.
double gauss_factor(int s, double x) {
  const double a = 1.0 / (kSigma * std::sqrt(2.0));
  const double t = (x - 0.5) * a;
  const double sign = s % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(a, s) * boost::math::hermite(static_cast<unsigned>(s), t) * std::exp(-t * t);
}

double sin_factor(int s, double x) { return std::pow(kTwoPi, s) * std::sin(kTwoPi * x + s * std::numbers::pi / 2); }

template <class Factor>
ScalarFunction product(Factor factor, int direction, int order) {
  return [factor, direction, order](std::span<const double> x) {
    double v = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) v *= factor(static_cast<int>(i), static_cast<int>(i) == direction ? order : 0, x[i]);
    return v;
  };
}

}  // namespace

std::vector<std::string> test_function_names() { return {"sin", "gauss", "poly"}; }

TestFunction make_test_function(const std::string& name, const std::vector<int>& degrees) {
  TestFunction t;
  t.name = name;
  if (name == "sin") {
    auto f = [](int, int s, double x) { return sin_factor(s, x); };
    t.derivative = [f](int i, int s) { return product(f, i, s); };
  } else if (name == "gauss") {
    auto f = [](int, int s, double x) { return gauss_factor(s, x); };
    t.derivative = [f](int i, int s) { return product(f, i, s); };
  } else if (name == "poly") {
    auto f = [degrees](int i, int s, double x) {
      const int p = i < static_cast<int>(degrees.size()) ? degrees[static_cast<std::size_t>(i)] : 0;
      return poly_factor(p, s, x);
    };
    t.derivative = [f](int i, int s) { return product(f, i, s); };
  } else {
    throw ValidationError("function", "unknown test function '" + name + "' (expected sin, gauss or poly)");
  }
  t.value = t.derivative(-1, 0);
  return t;
}

}  // namespace hbs
