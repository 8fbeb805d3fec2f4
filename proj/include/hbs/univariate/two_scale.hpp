#pragma once

#include <span>
#include <vector>

#include "hbs/common/rational.hpp"
#include "hbs/univariate/knot_vector.hpp"

namespace hbs {

/// One term of a two-scale relation: a fine B-spline with its knot
/// insertion coefficient, exact and rounded.
struct ChildTerm {
  LocalKnotVector local;
  int index = 0;  ///< B-spline index in the fine knot vector
  Rational exact;
  double coefficient = 0.0;
};

/// Children of the B-spline with local knots `parent` with respect to the
/// finer knot vector `fine`, in increasing index order. The parent's local
/// knot vector is refined by all knots of `fine` interior to its support;
/// every window of p + 2 consecutive knots of the result is a child, with
/// the coefficient produced by repeated single-knot (Boehm) insertion, so
/// that parent = sum of coefficient * child. Throws RefinementMismatch when
/// `fine` does not contain the parent's knots.
std::vector<ChildTerm> children_with_coefficients(const LocalKnotVector& parent, const KnotVector& fine);

/// Child test by interval containment plus endpoint multiplicities,
/// independent of knot insertion.
bool is_child(const LocalKnotVector& parent, const LocalKnotVector& child);

/// Indices of the B-splines of `coarse` having fine B-spline `child` as a child.
std::vector<int> parents_1d(int child, const KnotVector& fine, const KnotVector& coarse);

struct TwoScaleEntry {
  int index = 0;  ///< child index (rows) or parent index (columns)
  double coefficient = 0.0;
  Rational exact;
};

/// Two-scale coefficients between a knot vector and a refinement of it,
/// stored by parent and by child.
class TwoScaleMatrix {
 public:
  TwoScaleMatrix(const KnotVector& coarse, const KnotVector& fine);

  std::span<const TwoScaleEntry> children(int parent) const {
    return by_parent_[static_cast<std::size_t>(parent)];
  }
  std::span<const TwoScaleEntry> parents(int child) const { return by_child_[static_cast<std::size_t>(child)]; }

 private:
  std::vector<std::vector<TwoScaleEntry>> by_parent_;
  std::vector<std::vector<TwoScaleEntry>> by_child_;
};

}  // namespace hbs
