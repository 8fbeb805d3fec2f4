#include "hbs/quasiinterp/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>
#include <cmath>

#include "hbs/common/errors.hpp"

namespace hbs {

namespace {

constexpr int kMaxRule = 64;

GaussRule make_rule(int n) {
  GaussRule r;
  if (n == 1) {
    r.nodes = {0.0};
    r.weights = {2.0};
    return r;
  }
  // Boost returns the nonnegative zeros in increasing order.
  const std::vector<double> pos = boost::math::legendre_p_zeros<double>(n);
  std::vector<double> nodes;
  for (auto it = pos.rbegin(); it != pos.rend(); ++it)
    if (*it != 0.0) nodes.push_back(-*it);
  nodes.insert(nodes.end(), pos.begin(), pos.end());
  for (double x : nodes) {
    const double dp = boost::math::legendre_p_prime(n, x);
    r.nodes.push_back(x);
    r.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static const std::vector<GaussRule> table = [] {
    std::vector<GaussRule> t(kMaxRule + 1);
    for (int k = 1; k <= kMaxRule; ++k) t[static_cast<std::size_t>(k)] = make_rule(k);
    return t;
  }();
  if (n < 1 || n > kMaxRule) throw Error("Gauss-Legendre rule with " + std::to_string(n) + " points is not available");
  return table[static_cast<std::size_t>(n)];
}

TensorQuadrature tensor_gauss(std::span<const double> lo, std::span<const double> hi, std::span<const int> counts) {
  const int d = static_cast<int>(counts.size());
  TensorQuadrature q;
  q.dim = d;
  std::size_t total = 1;
  for (int c : counts) total *= static_cast<std::size_t>(c);
  q.points.reserve(total * static_cast<std::size_t>(d));
  q.weights.reserve(total);
  std::vector<int> m(static_cast<std::size_t>(d), 0);
  for (std::size_t k = 0; k < total; ++k) {
    double w = 1.0;
    for (int i = 0; i < d; ++i) {
      const auto u = static_cast<std::size_t>(i);
      const GaussRule& r = gauss_legendre(counts[u]);
      const double half = 0.5 * (hi[u] - lo[u]);
      q.points.push_back(lo[u] + half * (r.nodes[static_cast<std::size_t>(m[u])] + 1.0));
      w *= half * r.weights[static_cast<std::size_t>(m[u])];
    }
    q.weights.push_back(w);
    for (int i = 0; i < d; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (++m[u] < counts[u]) break;
      m[u] = 0;
    }
  }
  return q;
}

double checked_eval(const ScalarFunction& f, std::span<const double> x) {
  const double v = f(x);
  if (!std::isfinite(v)) throw EvaluationError("non-finite function value", {x.begin(), x.end()});
  return v;
}

}  // namespace hbs
