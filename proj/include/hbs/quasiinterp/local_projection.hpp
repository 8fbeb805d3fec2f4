#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "hbs/quasiinterp/quadrature.hpp"
#include "hbs/tensor/tensor_level.hpp"

namespace hbs {

/// L2 projection onto the polynomials on one cell, written in the local
/// B-spline basis B_Q (the N = prod(p_i + 1) functions nonzero on Q).
/// The mass matrix uses p_i + 1 Gauss points per direction, which
/// integrates products of two local functions exactly; the load vector
/// uses p_i + 1 + extra points.
class LocalProjection {
 public:
  LocalProjection(const TensorLevel& level, std::int64_t cell, int extra_points = 1);

  std::int64_t cell() const { return cell_; }
  /// B_Q in increasing index order.
  const std::vector<std::int64_t>& functions() const { return functions_; }
  /// Position of f in functions(), or -1.
  int local_position(std::int64_t f) const;
  const Eigen::MatrixXd& mass() const { return mass_; }

  /// lambda^Q(f) = M_Q^{-1} F_Q(f).
  Eigen::VectorXd coefficients(const ScalarFunction& f) const;

 private:
  std::int64_t cell_;
  std::vector<std::int64_t> functions_;
  Eigen::MatrixXd mass_;
  TensorQuadrature rhs_rule_;
  Eigen::MatrixXd dual_;  // local functions x rhs points: M_Q^{-1} applied to the weighted load rule
};

}  // namespace hbs
