#pragma once

#include <memory>
#include <vector>

#include "hbs/hierarchy/spline.hpp"
#include "hbs/quasiinterp/local_projection.hpp"
#include "hbs/quasiinterp/omega.hpp"

namespace hbs {

struct QuasiInterpConfig {
  /// Gauss points added to p_i + 1 for the load vectors.
  int extra_points = 1;
};

/// P_l f = sum over beta in B_{l,omega_l} of lambda_beta(f) beta, where
/// lambda_beta is the coefficient of beta in the local L2 projection on
/// Q_beta, the smallest-index cell of supp beta inside omega_l.
class LevelQuasiInterpolant {
 public:
  LevelQuasiInterpolant(std::shared_ptr<const LevelSequence> levels, int level, CellSet omega,
                        QuasiInterpConfig config = {});

  int level() const { return level_; }
  const TensorLevel& tensor_level() const { return levels_->level(level_); }
  const CellSet& omega() const { return omega_; }
  /// B_{l,omega_l} in increasing order.
  const std::vector<std::int64_t>& members() const { return members_; }
  bool is_member(std::int64_t f) const { return slot_[static_cast<std::size_t>(f)] >= 0; }
  /// Q_beta, or -1 for non-members.
  std::int64_t chosen_cell(std::int64_t beta) const;

  /// lambda_beta(f); throws Error for non-members.
  double dual(std::int64_t beta, const ScalarFunction& f) const;
  /// Dense coefficients of P_l f over all level-l functions.
  std::vector<double> apply(const ScalarFunction& f) const;

 private:
  std::shared_ptr<const LevelSequence> levels_;
  int level_;
  CellSet omega_;
  std::vector<std::int64_t> members_;
  std::vector<std::int64_t> slot_;        // function -> member position or -1
  std::vector<int> member_cell_;          // member -> projection
  std::vector<int> member_local_;         // member -> position in B_Q
  std::vector<LocalProjection> projections_;
};

/// Pi_0 = P_0 and Pi_{l+1} = Pi_l + P_{l+1}(id - Pi_l); Pi = Pi_{n-1}.
class MultiscaleQuasiInterpolant {
 public:
  explicit MultiscaleQuasiInterpolant(std::shared_ptr<const SubdomainHierarchy> h, QuasiInterpConfig config = {});

  const SubdomainHierarchy& hierarchy() const { return *h_; }
  int depth() const { return static_cast<int>(ops_.size()); }
  const OmegaDomains& omegas() const { return omegas_; }
  const Admissibility& admissibility() const { return admissibility_; }
  const LevelQuasiInterpolant& level(int l) const { return ops_[static_cast<std::size_t>(l)]; }

  /// The recursion in the tensor bases: level l holds the coefficients of
  /// P_l(f - Pi_{l-1} f), so Pi_l f is the sum of levels 0 .. l.
  MultiLevelSpline recursion(const ScalarFunction& f) const;
  /// Pi f over the refinable basis H~. Throws AdmissibilityError when the
  /// omega domains are not nested.
  HierSplineFunction apply(const ScalarFunction& f) const;
  /// P_l f + sum_{k > l} P_k(f - P_{k-1} f), which equals Pi f on omega_l
  /// when the omega domains are nested.
  MultiLevelSpline decomposition(int l, const ScalarFunction& f) const;

  const std::shared_ptr<const HierBasis>& refinable_basis() const { return tilde_; }

 private:
  std::shared_ptr<const SubdomainHierarchy> h_;
  OmegaDomains omegas_;
  Admissibility admissibility_;
  std::vector<LevelQuasiInterpolant> ops_;
  std::shared_ptr<const HierBasis> tilde_;
};

}  // namespace hbs
