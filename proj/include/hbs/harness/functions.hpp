#pragma once

#include <string>
#include <vector>

#include "hbs/quasiinterp/quadrature.hpp"

namespace hbs {

/// A smooth test function with its pure directional derivatives.
struct TestFunction {
  std::string name;
  ScalarFunction value;
  /// derivative(i, s) is D^s_{x_i} f.
  std::function<ScalarFunction(int direction, int order)> derivative;
};

/// Built-in catalog:
///   sin    prod_i sin(2 pi x_i)
///   gauss  exp(-|x - c|^2 / (2 sigma^2)), c = (1/2, ..., 1/2), sigma = 1/5
///   poly   prod_i sum_{k <= p_i} x_i^k / (k + 1), a tensor polynomial of degree p
/// `degrees` is only used by "poly". Throws ValidationError("function")
/// for unknown names.
TestFunction make_test_function(const std::string& name, const std::vector<int>& degrees);

std::vector<std::string> test_function_names();

}  // namespace hbs
