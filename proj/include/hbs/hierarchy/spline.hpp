#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hbs/hierarchy/basis.hpp"

namespace hbs {

/// Sum over all levels of dense per-level coefficient vectors, i.e. an
/// element of V_0 + V_1 + ... written in the tensor bases.
class MultiLevelSpline {
 public:
  MultiLevelSpline(std::shared_ptr<const LevelSequence> levels, int depth);

  const LevelSequence& levels() const { return *levels_; }
  const std::shared_ptr<const LevelSequence>& level_sequence() const { return levels_; }
  int depth() const { return static_cast<int>(coeffs_.size()); }

  std::span<double> level(int l) { return coeffs_[static_cast<std::size_t>(l)]; }
  std::span<const double> level(int l) const { return coeffs_[static_cast<std::size_t>(l)]; }
  double& operator[](FunctionId f) {
    return coeffs_[static_cast<std::size_t>(f.level)][static_cast<std::size_t>(f.index)];
  }
  double operator[](FunctionId f) const {
    return coeffs_[static_cast<std::size_t>(f.level)][static_cast<std::size_t>(f.index)];
  }

  double eval(std::span<const double> x) const;
  /// Sum of the contributions of level `l` only.
  double eval_level(int l, std::span<const double> x) const;

  MultiLevelSpline& operator+=(const MultiLevelSpline& other);

 private:
  std::shared_ptr<const LevelSequence> levels_;
  std::vector<std::vector<double>> coeffs_;
};

/// Coefficients over the active functions of a HierBasis.
class HierSplineFunction {
 public:
  explicit HierSplineFunction(std::shared_ptr<const HierBasis> basis);
  HierSplineFunction(std::shared_ptr<const HierBasis> basis, std::vector<double> coefficients);

  const HierBasis& basis() const { return *basis_; }
  const std::shared_ptr<const HierBasis>& basis_ptr() const { return basis_; }
  std::span<const double> coefficients() const { return coeffs_; }
  std::span<double> coefficients() { return coeffs_; }
  double coefficient(FunctionId f) const;

  double eval(std::span<const double> x) const;
  MultiLevelSpline to_multilevel() const;

 private:
  std::shared_ptr<const HierBasis> basis_;
  std::vector<double> coeffs_;
};

/// Rewrites a multilevel combination over the active functions of `target`
/// by repeatedly applying the two-scale relation to every function that is
/// deactivated in `target`, from the coarsest level down. Throws
/// InvariantViolation when a function that is neither active nor
/// deactivated carries a coefficient.
HierSplineFunction express_in_basis(const MultiLevelSpline& s, std::shared_ptr<const HierBasis> target);

/// Expansion of a deactivated function over finer active functions.
/// Throws Error when beta is not deactivated in `target`.
HierSplineFunction expand_deactivated(FunctionId beta, std::shared_ptr<const HierBasis> target);

}  // namespace hbs
