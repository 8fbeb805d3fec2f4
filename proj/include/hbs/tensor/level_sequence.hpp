#pragma once

#include <memory>
#include <vector>

#include "hbs/common/rational.hpp"
#include "hbs/tensor/tensor_level.hpp"
#include "hbs/univariate/two_scale.hpp"

namespace hbs {

/// A function of an adjacent level together with its two-scale coefficient.
struct TensorTerm {
  FunctionId id;
  double coefficient = 0.0;
  Rational exact;
};

/// How the knot vectors of levels 1, 2, ... are obtained.
struct RefinementRule {
  enum class Kind { Dyadic, Explicit };
  Kind kind = Kind::Dyadic;
  /// For Explicit: explicit[l][i] is the knot vector of level l + 1 in
  /// direction i.
  std::vector<std::vector<KnotVector>> explicit_levels;

  static RefinementRule dyadic() { return {}; }
};

/// Nested tensor levels 0 .. depth - 1 with cached univariate two-scale
/// matrices between consecutive levels.
class LevelSequence {
 public:
  /// Throws NestingViolation when a level does not refine its predecessor.
  explicit LevelSequence(std::vector<TensorLevel> levels);

  int depth() const { return static_cast<int>(levels_.size()); }
  int dim() const { return levels_.front().dim(); }
  const TensorLevel& level(int l) const { return levels_[static_cast<std::size_t>(l)]; }
  /// Univariate two-scale matrix between level l and l + 1 in one direction.
  const TwoScaleMatrix& two_scale(int l, int direction) const {
    return two_scale_[static_cast<std::size_t>(l)][static_cast<std::size_t>(direction)];
  }
  /// Whether all levels after the first are dyadic refinements.
  bool dyadic() const;

  /// With exact = false the rational coefficients are left at zero.
  std::vector<TensorTerm> children(FunctionId parent, bool exact = true) const;
  std::vector<TensorTerm> parents(FunctionId child, bool exact = true) const;

  /// Copy with additional levels appended by dyadic refinement.
  LevelSequence extended(int new_depth) const;

 private:
  template <class Select>
  std::vector<TensorTerm> combine(FunctionId id, int target_level, bool exact, Select&& select) const;

  std::vector<TensorLevel> levels_;
  std::vector<std::vector<TwoScaleMatrix>> two_scale_;
};

/// Levels 0 .. depth - 1 starting from one knot vector per direction.
LevelSequence build_level_sequence(const std::vector<KnotVector>& initial, int depth,
                                   const RefinementRule& rule = RefinementRule::dyadic());

/// Children of a level-l function in the next level, with products of the
/// univariate coefficients. Throws when `fine` is not level l + 1 or does
/// not refine `coarse`.
std::vector<TensorTerm> tensor_children(const TensorLevel& coarse, FunctionId parent, const TensorLevel& fine);

}  // namespace hbs
