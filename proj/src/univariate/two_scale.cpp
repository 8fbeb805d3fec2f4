#include "hbs/univariate/two_scale.hpp"

#include <algorithm>
#include <string>

#include "hbs/common/errors.hpp"

namespace hbs {

namespace {

/// Boehm insertion of `t` into the local knot sequence `tau` carrying
/// B-spline coefficients `coeffs` (one per window of p + 2 knots).
void insert_knot(std::vector<Rational>& tau, std::vector<Rational>& coeffs, const Rational& t, int p) {
  const auto upper = std::upper_bound(tau.begin(), tau.end(), t);
  const int k = static_cast<int>(upper - tau.begin()) - 1;
  const int count = static_cast<int>(coeffs.size());
  std::vector<Rational> next(coeffs.size() + 1);
  for (int i = 0; i <= count; ++i) {
    Rational alpha;
    if (i <= k - p)
      alpha = 1;
    else if (i >= k + 1)
      alpha = 0;
    else
      alpha = (t - tau[static_cast<std::size_t>(i)]) /
              (tau[static_cast<std::size_t>(i + p)] - tau[static_cast<std::size_t>(i)]);
    Rational value = 0;
    if (i < count && alpha != 0) value += alpha * coeffs[static_cast<std::size_t>(i)];
    if (i > 0 && alpha != 1) value += (1 - alpha) * coeffs[static_cast<std::size_t>(i - 1)];
    next[static_cast<std::size_t>(i)] = std::move(value);
  }
  tau.insert(upper, t);
  coeffs = std::move(next);
}

}  // namespace

std::vector<ChildTerm> children_with_coefficients(const LocalKnotVector& parent, const KnotVector& fine) {
  const int p = parent.degree();
  if (p != fine.degree())
    throw RefinementMismatch("degree " + std::to_string(p) + " parent against degree " +
                             std::to_string(fine.degree()) + " knot vector");
  const auto pk = parent.knots();
  for (std::size_t i = 0; i < pk.size(); ++i) {
    if (i > 0 && pk[i] == pk[i - 1]) continue;
    if (fine.multiplicity(pk[i]) < parent.multiplicity(pk[i]))
      throw RefinementMismatch("knot " + std::to_string(pk[i]) + " of the parent is missing from the fine knot vector");
  }

  const double lo = parent.front();
  const double hi = parent.back();
  std::vector<double> insertions;
  const Breakpoints fbp = fine.breakpoints();
  for (std::size_t j = 0; j < fbp.values.size(); ++j) {
    const double v = fbp.values[j];
    if (v <= lo || v >= hi) continue;
    const int extra = fbp.multiplicities[j] - parent.multiplicity(v);
    insertions.insert(insertions.end(), static_cast<std::size_t>(extra), v);
  }

  std::vector<Rational> tau;
  tau.reserve(pk.size() + insertions.size());
  for (double k : pk) tau.push_back(to_rational(k));
  std::vector<Rational> coeffs{Rational(1)};
  for (double t : insertions) insert_knot(tau, coeffs, to_rational(t), p);

  std::vector<double> refined(pk.begin(), pk.end());
  refined.insert(refined.end(), insertions.begin(), insertions.end());
  std::sort(refined.begin(), refined.end());

  const auto fk = fine.knots();
  std::vector<ChildTerm> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::vector<double> window(refined.begin() + static_cast<std::ptrdiff_t>(i),
                               refined.begin() + static_cast<std::ptrdiff_t>(i) + p + 2);
    const double w0 = window.front();
    const int lead = static_cast<int>(std::count(window.begin(), window.end(), w0));
    const auto run_end = std::upper_bound(fk.begin(), fk.end(), w0);
    const int index = static_cast<int>(run_end - fk.begin()) - lead;
    if (index < 0 || index >= fine.size() ||
        !std::equal(window.begin(), window.end(), fk.begin() + index))
      throw RefinementMismatch("refined local knots do not match a window of the fine knot vector");
    ChildTerm term;
    term.local = LocalKnotVector(std::move(window), index);
    term.index = index;
    term.coefficient = to_double(coeffs[i]);
    term.exact = std::move(coeffs[i]);
    out.push_back(std::move(term));
  }
  return out;
}

bool is_child(const LocalKnotVector& parent, const LocalKnotVector& child) {
  if (parent.degree() != child.degree()) return false;
  if (!(parent.front() <= child.front() && child.front() <= child.back() && child.back() <= parent.back()))
    return false;
  for (double end : {parent.front(), parent.back()})
    if (child.multiplicity(end) > parent.multiplicity(end)) return false;
  return true;
}

std::vector<int> parents_1d(int child, const KnotVector& fine, const KnotVector& coarse) {
  const LocalKnotVector c = fine.local(child);
  std::vector<int> out;
  for (int j = 0; j < coarse.size(); ++j) {
    const auto [a, b] = coarse.support(j);
    if (a > c.front()) break;
    if (b < c.back()) continue;
    if (is_child(coarse.local(j), c)) out.push_back(j);
  }
  return out;
}

TwoScaleMatrix::TwoScaleMatrix(const KnotVector& coarse, const KnotVector& fine)
    : by_parent_(static_cast<std::size_t>(coarse.size())), by_child_(static_cast<std::size_t>(fine.size())) {
  for (int j = 0; j < coarse.size(); ++j) {
    for (auto& term : children_with_coefficients(coarse.local(j), fine)) {
      by_child_[static_cast<std::size_t>(term.index)].push_back({j, term.coefficient, term.exact});
      by_parent_[static_cast<std::size_t>(j)].push_back({term.index, term.coefficient, std::move(term.exact)});
    }
  }
}

}  // namespace hbs
