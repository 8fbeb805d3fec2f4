#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hbs {

/// Cox-de Boor recursion for the single B-spline with local knots
/// `knots` (p + 2 values, nondecreasing, inside [0, 1]).
///
/// Degree-zero pieces are half-open [t_i, t_{i+1}) so the spline is
/// right-continuous; at x = 1, the right end of the domain, they become
/// (t_i, t_{i+1}] and the value is the left limit. 0/0 terms vanish.
/// Templated so the same recursion runs in exact rational arithmetic.
template <class Scalar>
Scalar eval_bspline(std::span<const Scalar> knots, const Scalar& x) {
  const std::size_t m = knots.size();
  const std::size_t p = m - 2;
  const bool right_end = (x == Scalar(1));
  std::vector<Scalar> n(p + 1, Scalar(0));
  for (std::size_t i = 0; i <= p; ++i) {
    const Scalar& a = knots[i];
    const Scalar& b = knots[i + 1];
    const bool inside = right_end ? (a < x && x <= b) : (a <= x && x < b);
    n[i] = inside ? Scalar(1) : Scalar(0);
  }
  for (std::size_t r = 1; r <= p; ++r) {
    for (std::size_t i = 0; i + r <= p; ++i) {
      Scalar value(0);
      const Scalar left = knots[i + r] - knots[i];
      if (left != Scalar(0) && n[i] != Scalar(0)) value += (x - knots[i]) / left * n[i];
      const Scalar right = knots[i + r + 1] - knots[i + 1];
      if (right != Scalar(0) && n[i + 1] != Scalar(0)) value += (knots[i + r + 1] - x) / right * n[i + 1];
      n[i] = value;
    }
  }
  return n[0];
}

inline double eval_bspline(std::span<const double> knots, double x) {
  return eval_bspline<double>(knots, x);
}

}  // namespace hbs
