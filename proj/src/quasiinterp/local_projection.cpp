#include "hbs/quasiinterp/local_projection.hpp"

#include <algorithm>

#include "hbs/common/errors.hpp"

namespace hbs {

namespace {

/// Values of the p + 1 univariate functions on `interval` at the nodes,
/// as a (nodes x p+1) matrix.
Eigen::MatrixXd univariate_values(const KnotVector& kv, int interval, const std::vector<double>& nodes) {
  const int p = kv.degree();
  const int first = kv.first_function_on(interval);
  Eigen::MatrixXd v(static_cast<Eigen::Index>(nodes.size()), p + 1);
  std::array<double, 32> buf{};
  for (std::size_t q = 0; q < nodes.size(); ++q) {
    if (kv.eval_nonzero(nodes[q], buf) != first) throw InvariantViolation("quadrature node outside its cell");
    for (int k = 0; k <= p; ++k) v(static_cast<Eigen::Index>(q), k) = buf[static_cast<std::size_t>(k)];
  }
  return v;
}

std::vector<double> mapped_nodes(const GaussRule& r, double lo, double hi) {
  std::vector<double> x;
  for (double t : r.nodes) x.push_back(lo + 0.5 * (hi - lo) * (t + 1.0));
  return x;
}

}  // namespace

LocalProjection::LocalProjection(const TensorLevel& level, std::int64_t cell, int extra_points) : cell_(cell) {
  const int d = level.dim();
  const MultiIndex cm = level.cell_multi(cell);
  const Box box = level.cell_box(cell);
  for_each_index(level.functions_on_cell(cell), level.function_strides(),
                 [&](std::int64_t f, const MultiIndex&) { functions_.push_back(f); });
  const auto n = static_cast<Eigen::Index>(functions_.size());

  // Univariate mass matrices and load-rule values; the tensor mass matrix
  // is their Kronecker product.
  std::vector<Eigen::MatrixXd> mass1(static_cast<std::size_t>(d)), dual1(static_cast<std::size_t>(d));
  std::vector<int> rhs_counts;
  for (int i = 0; i < d; ++i) {
    const auto u = static_cast<std::size_t>(i);
    const KnotVector& kv = level.direction(i);
    const int p = kv.degree();
    const GaussRule& g = gauss_legendre(p + 1);
    const Eigen::MatrixXd v = univariate_values(kv, cm[u], mapped_nodes(g, box.lo[u], box.hi[u]));
    const double half = 0.5 * (box.hi[u] - box.lo[u]);
    Eigen::VectorXd w(static_cast<Eigen::Index>(g.weights.size()));
    for (std::size_t q = 0; q < g.weights.size(); ++q) w(static_cast<Eigen::Index>(q)) = half * g.weights[q];
    mass1[u] = v.transpose() * w.asDiagonal() * v;
    rhs_counts.push_back(p + 1 + extra_points);
    const GaussRule& gr = gauss_legendre(p + 1 + extra_points);
    const Eigen::MatrixXd vr = univariate_values(kv, cm[u], mapped_nodes(gr, box.lo[u], box.hi[u]));
    // Univariate dual weights M_i^{-1} V_i^T W_i, solved in extended precision:
    // the tensor mass matrix is far worse conditioned than its factors.
    using MatL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    MatL rt = vr.transpose().cast<long double>();
    for (Eigen::Index q = 0; q < rt.cols(); ++q) rt.col(q) *= static_cast<long double>(half * gr.weights[static_cast<std::size_t>(q)]);
    Eigen::LLT<MatL> f1(mass1[u].cast<long double>());
    if (f1.info() != Eigen::Success) throw InvariantViolation("local mass matrix is not positive definite");
    dual1[u] = f1.solve(rt).cast<double>();
  }

  mass_.resize(n, n);
  rhs_rule_ = tensor_gauss(box.lo, box.hi, rhs_counts);
  dual_.resize(n, static_cast<Eigen::Index>(rhs_rule_.size()));
  // Local function a has local multi-index digits a_i (direction 0 fastest);
  // rhs point q has digits q_i in the same layout.
  std::vector<int> fdig(static_cast<std::size_t>(d)), gdig(static_cast<std::size_t>(d));
  auto digits = [&](Eigen::Index k, const std::vector<int>& ext, std::vector<int>& out) {
    for (int i = 0; i < d; ++i) {
      out[static_cast<std::size_t>(i)] = static_cast<int>(k % ext[static_cast<std::size_t>(i)]);
      k /= ext[static_cast<std::size_t>(i)];
    }
  };
  std::vector<int> fext;
  for (int i = 0; i < d; ++i) fext.push_back(level.degree(i) + 1);
  for (Eigen::Index a = 0; a < n; ++a) {
    digits(a, fext, fdig);
    for (Eigen::Index b = 0; b < n; ++b) {
      digits(b, fext, gdig);
      double m = 1.0;
      for (int i = 0; i < d; ++i) {
        const auto u = static_cast<std::size_t>(i);
        m *= mass1[u](fdig[u], gdig[u]);
      }
      mass_(a, b) = m;
    }
    for (Eigen::Index q = 0; q < static_cast<Eigen::Index>(rhs_rule_.size()); ++q) {
      digits(q, rhs_counts, gdig);
      double v = 1.0;
      for (int i = 0; i < d; ++i) {
        const auto u = static_cast<std::size_t>(i);
        v *= dual1[u](fdig[u], gdig[u]);
      }
      dual_(a, q) = v;
    }
  }
}

int LocalProjection::local_position(std::int64_t f) const {
  const auto it = std::lower_bound(functions_.begin(), functions_.end(), f);
  return it != functions_.end() && *it == f ? static_cast<int>(it - functions_.begin()) : -1;
}

Eigen::VectorXd LocalProjection::coefficients(const ScalarFunction& f) const {
  Eigen::VectorXd vals(static_cast<Eigen::Index>(rhs_rule_.size()));
  for (std::size_t q = 0; q < rhs_rule_.size(); ++q) vals(static_cast<Eigen::Index>(q)) = checked_eval(f, rhs_rule_.point(q));
  return dual_ * vals;
}

}  // namespace hbs
