#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hbs {

/// A function on the parameter domain, called with a point of length d.
/// Must be safe to call concurrently.
using ScalarFunction = std::function<double(std::span<const double>)>;

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// The n-point rule, 1 <= n <= 64. Rules are computed once and cached.
const GaussRule& gauss_legendre(int n);

/// Tensor Gauss points on a box, flattened: point k occupies
/// points[k * d .. k * d + d).
struct TensorQuadrature {
  int dim = 0;
  std::vector<double> points;
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  std::span<const double> point(std::size_t k) const {
    return std::span<const double>(points).subspan(k * static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
  }
};

TensorQuadrature tensor_gauss(std::span<const double> lo, std::span<const double> hi, std::span<const int> counts);

/// f(x), throwing EvaluationError when the value is not finite.
double checked_eval(const ScalarFunction& f, std::span<const double> x);

}  // namespace hbs
