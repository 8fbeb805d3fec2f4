#include "hbs/univariate/knot_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hbs/common/errors.hpp"
#include "hbs/univariate/bspline.hpp"

namespace hbs {

namespace {

void fail(const std::string& message, const std::string& where = {}) {
  throw ValidationError("knot vector", message, where);
}

}  // namespace

LocalKnotVector::LocalKnotVector(std::vector<double> knots, int origin)
    : knots_(std::move(knots)), origin_(origin) {
  if (knots_.size() < 2) fail("a local knot vector needs at least two knots");
  if (!std::is_sorted(knots_.begin(), knots_.end())) fail("local knots are not nondecreasing");
}

int LocalKnotVector::multiplicity(double value) const {
  return static_cast<int>(std::count(knots_.begin(), knots_.end(), value));
}

double LocalKnotVector::operator()(double x) const { return eval_bspline(std::span<const double>(knots_), x); }

KnotVector::KnotVector(int degree, std::vector<double> knots) : degree_(degree), knots_(std::move(knots)) {
  if (degree_ < 0) fail("degree must be nonnegative");
  if (degree_ > 30) fail("degrees above 30 are not supported");
  const auto p = static_cast<std::size_t>(degree_);
  if (knots_.size() < 2 * p + 2)
    fail("need at least 2p+2 knots, got " + std::to_string(knots_.size()));
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i])) fail("non-finite knot", "knot " + std::to_string(i));
    if (i > 0 && knots_[i] < knots_[i - 1]) fail("knots are not nondecreasing", "knot " + std::to_string(i));
  }
  for (std::size_t i = 0; i <= p; ++i) {
    if (knots_[i] != 0.0) fail("first p+1 knots must equal 0", "knot " + std::to_string(i));
    if (knots_[knots_.size() - 1 - i] != 1.0)
      fail("last p+1 knots must equal 1", "knot " + std::to_string(knots_.size() - 1 - i));
  }
  if (knots_[p + 1] == 0.0) fail("knot 0 repeated more than p+1 times");
  if (knots_[knots_.size() - p - 2] == 1.0) fail("knot 1 repeated more than p+1 times");

  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (knots_[i] < knots_[i + 1]) {
      IntervalCell cell;
      cell.index = static_cast<int>(intervals_.size());
      cell.flat = static_cast<int>(i);
      cell.lo = knots_[i];
      cell.hi = knots_[i + 1];
      intervals_.push_back(cell);
    }
  }
  const Breakpoints bp = breakpoints();
  for (std::size_t j = 1; j + 1 < bp.values.size(); ++j) {
    if (bp.multiplicities[j] > degree_ + 1)
      fail("interior knot " + std::to_string(bp.values[j]) + " has multiplicity " +
           std::to_string(bp.multiplicities[j]) + " > p+1");
  }
}

KnotVector KnotVector::from_breakpoints(int degree, const Breakpoints& bp) {
  if (bp.values.size() != bp.multiplicities.size())
    fail("breakpoints and multiplicities differ in length");
  if (bp.values.size() < 2) fail("need at least two breakpoints");
  for (std::size_t j = 1; j < bp.values.size(); ++j)
    if (!(bp.values[j - 1] < bp.values[j])) fail("breakpoints must be strictly increasing", "breakpoint " + std::to_string(j));
  std::vector<double> knots;
  for (std::size_t j = 0; j < bp.values.size(); ++j) {
    if (bp.multiplicities[j] < 1) fail("multiplicities must be positive", "breakpoint " + std::to_string(j));
    knots.insert(knots.end(), static_cast<std::size_t>(bp.multiplicities[j]), bp.values[j]);
  }
  return KnotVector(degree, std::move(knots));
}

KnotVector KnotVector::uniform(int degree, int intervals) {
  if (intervals < 1) fail("need at least one interval");
  Breakpoints bp;
  for (int i = 0; i <= intervals; ++i) {
    bp.values.push_back(static_cast<double>(i) / intervals);
    bp.multiplicities.push_back(i == 0 || i == intervals ? degree + 1 : 1);
  }
  return from_breakpoints(degree, bp);
}

Breakpoints KnotVector::breakpoints() const {
  Breakpoints bp;
  for (double k : knots_) {
    if (bp.values.empty() || bp.values.back() != k) {
      bp.values.push_back(k);
      bp.multiplicities.push_back(1);
    } else {
      ++bp.multiplicities.back();
    }
  }
  return bp;
}

int KnotVector::multiplicity(double value) const {
  const auto [lo, hi] = std::equal_range(knots_.begin(), knots_.end(), value);
  return static_cast<int>(hi - lo);
}

LocalKnotVector KnotVector::local(int j) const {
  const auto first = knots_.begin() + j;
  return LocalKnotVector(std::vector<double>(first, first + degree_ + 2), j);
}

std::pair<double, double> KnotVector::support(int j) const { return {knot(j), knot(j + degree_ + 1)}; }

std::pair<double, double> KnotVector::support_extension(int i) const {
  const int k = interval(i).flat;
  return {knot(k - degree_), knot(k + degree_ + 1)};
}

int KnotVector::find_interval(double x) const {
  if (x >= 1.0) return num_intervals() - 1;
  if (x <= 0.0) return 0;
  const auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                                   [](double v, const IntervalCell& c) { return v < c.lo; });
  return static_cast<int>(it - intervals_.begin()) - 1;
}

std::pair<int, int> KnotVector::intervals_overlapping(double lo, double hi) const {
  const auto first = std::partition_point(intervals_.begin(), intervals_.end(),
                                          [lo](const IntervalCell& c) { return c.hi <= lo; });
  const auto last = std::partition_point(first, intervals_.end(), [hi](const IntervalCell& c) { return c.lo < hi; });
  return {static_cast<int>(first - intervals_.begin()), static_cast<int>(last - intervals_.begin())};
}

int KnotVector::eval_nonzero(double x, std::span<double> values) const {
  const int p = degree_;
  const int k = interval(find_interval(x)).flat;
  // Triangular scheme; left/right hold distances to the neighbouring knots.
  double left[32];
  double right[32];
  values[0] = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = x - knot(k + 1 - j);
    right[j] = knot(k + j) - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double temp = values[static_cast<std::size_t>(r)] / (right[r + 1] + left[j - r]);
      values[static_cast<std::size_t>(r)] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    values[static_cast<std::size_t>(j)] = saved;
  }
  return k - p;
}

double KnotVector::eval(int j, double x) const {
  const auto first = knots_.begin() + j;
  return eval_bspline(std::span<const double>(&*first, static_cast<std::size_t>(degree_ + 2)), x);
}

double KnotVector::max_interval_length() const {
  double h = 0.0;
  for (const auto& c : intervals_) h = std::max(h, c.length());
  return h;
}

double KnotVector::quasi_uniformity() const {
  double theta = 1.0;
  for (std::size_t i = 1; i < intervals_.size(); ++i) {
    const double a = intervals_[i - 1].length();
    const double b = intervals_[i].length();
    theta = std::max(theta, std::max(a / b, b / a));
  }
  return theta;
}

bool KnotVector::is_refined_by(const KnotVector& fine) const {
  if (fine.degree_ != degree_) return false;
  const Breakpoints bp = breakpoints();
  for (std::size_t j = 0; j < bp.values.size(); ++j)
    if (fine.multiplicity(bp.values[j]) < bp.multiplicities[j]) return false;
  return true;
}

KnotVector dyadic_refine(const KnotVector& kv) {
  const Breakpoints bp = kv.breakpoints();
  Breakpoints out;
  for (std::size_t j = 0; j < bp.values.size(); ++j) {
    if (j > 0) {
      out.values.push_back(0.5 * (bp.values[j - 1] + bp.values[j]));
      out.multiplicities.push_back(1);
    }
    out.values.push_back(bp.values[j]);
    out.multiplicities.push_back(bp.multiplicities[j]);
  }
  return KnotVector::from_breakpoints(kv.degree(), out);
}

}  // namespace hbs
