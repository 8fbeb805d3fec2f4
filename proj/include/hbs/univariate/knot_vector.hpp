#pragma once

#include <span>
#include <utility>
#include <vector>

namespace hbs {

/// Distinct knot values with their multiplicities.
struct Breakpoints {
  std::vector<double> values;
  std::vector<int> multiplicities;
};

/// A nonempty mesh interval [lo, hi] = [knot(flat), knot(flat + 1)].
struct IntervalCell {
  int index = 0;  ///< position among the nonempty intervals
  int flat = 0;   ///< knot index k with knot(k) = lo < knot(k + 1) = hi
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
};

/// The p + 2 consecutive knots that determine one B-spline.
class LocalKnotVector {
 public:
  LocalKnotVector() = default;
  LocalKnotVector(std::vector<double> knots, int origin);

  int degree() const { return static_cast<int>(knots_.size()) - 2; }
  /// Index of the B-spline within the knot vector it was taken from.
  int origin() const { return origin_; }
  std::span<const double> knots() const { return knots_; }
  double front() const { return knots_.front(); }
  double back() const { return knots_.back(); }
  /// Number of copies of `value` in this local knot vector.
  int multiplicity(double value) const;

  double operator()(double x) const;

  /// Compares knots only; the origin is bookkeeping.
  bool operator==(const LocalKnotVector& other) const { return knots_ == other.knots_; }

 private:
  std::vector<double> knots_;
  int origin_ = 0;
};

/// p-open knot vector on [0, 1]. Indices are 0-based: B-spline j has local
/// knots knot(j) .. knot(j + p + 1).
class KnotVector {
 public:
  /// Throws ValidationError("knot vector", ...) unless the sequence is
  /// p-open, nondecreasing, finite and has interior multiplicities <= p + 1.
  KnotVector(int degree, std::vector<double> knots);

  static KnotVector from_breakpoints(int degree, const Breakpoints& bp);
  /// Maximal smoothness on `intervals` equal intervals.
  static KnotVector uniform(int degree, int intervals);

  int degree() const { return degree_; }
  /// Number of B-splines n.
  int size() const { return static_cast<int>(knots_.size()) - degree_ - 1; }
  std::span<const double> knots() const { return knots_; }
  double knot(int i) const { return knots_[static_cast<std::size_t>(i)]; }

  Breakpoints breakpoints() const;
  int multiplicity(double value) const;

  int num_intervals() const { return static_cast<int>(intervals_.size()); }
  const IntervalCell& interval(int i) const { return intervals_[static_cast<std::size_t>(i)]; }
  std::span<const IntervalCell> intervals() const { return intervals_; }

  LocalKnotVector local(int j) const;
  std::pair<double, double> support(int j) const;
  /// Union of the supports of the B-splines that act on interval `i`.
  std::pair<double, double> support_extension(int i) const;

  /// Nonempty interval containing x: right-continuous in the interior, the
  /// last interval for x = 1.
  int find_interval(double x) const;
  /// Intervals whose interiors meet the open interval (lo, hi): [first, last).
  std::pair<int, int> intervals_overlapping(double lo, double hi) const;
  /// First B-spline index that is nonzero on interval `i` (p + 1 follow).
  int first_function_on(int i) const { return intervals_[static_cast<std::size_t>(i)].flat - degree_; }

  /// Writes the p + 1 B-splines that may be nonzero at x into `values`
  /// and returns the index of the first one.
  int eval_nonzero(double x, std::span<double> values) const;
  double eval(int j, double x) const;

  double max_interval_length() const;
  /// Largest ratio between lengths of adjacent nonempty intervals.
  double quasi_uniformity() const;

  /// True when every knot of *this appears in `fine` with at least the same
  /// multiplicity, i.e. this sequence is a subsequence of `fine`.
  bool is_refined_by(const KnotVector& fine) const;

  bool operator==(const KnotVector& other) const {
    return degree_ == other.degree_ && knots_ == other.knots_;
  }

 private:
  int degree_;
  std::vector<double> knots_;
  std::vector<IntervalCell> intervals_;
};

/// Inserts the midpoint of every nonempty interval once, keeping existing
/// multiplicities.
KnotVector dyadic_refine(const KnotVector& kv);

}  // namespace hbs
