#include "hbs/hierarchy/spline.hpp"

#include "hbs/common/errors.hpp"

namespace hbs {

MultiLevelSpline::MultiLevelSpline(std::shared_ptr<const LevelSequence> levels, int depth)
    : levels_(std::move(levels)) {
  if (depth > levels_->depth()) throw Error("spline depth exceeds the level sequence");
  for (int l = 0; l < depth; ++l) coeffs_.emplace_back(static_cast<std::size_t>(levels_->level(l).num_functions()), 0.0);
}

double MultiLevelSpline::eval_level(int l, std::span<const double> x) const {
  const auto& c = coeffs_[static_cast<std::size_t>(l)];
  double sum = 0.0;
  levels_->level(l).for_each_nonzero(x, [&](std::int64_t f, double v) { sum += c[static_cast<std::size_t>(f)] * v; });
  return sum;
}

double MultiLevelSpline::eval(std::span<const double> x) const {
  double sum = 0.0;
  for (int l = 0; l < depth(); ++l) sum += eval_level(l, x);
  return sum;
}

MultiLevelSpline& MultiLevelSpline::operator+=(const MultiLevelSpline& other) {
  if (other.depth() > depth()) throw Error("cannot add a deeper multilevel spline");
  for (int l = 0; l < other.depth(); ++l) {
    auto& a = coeffs_[static_cast<std::size_t>(l)];
    const auto& b = other.coeffs_[static_cast<std::size_t>(l)];
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  }
  return *this;
}

HierSplineFunction::HierSplineFunction(std::shared_ptr<const HierBasis> basis)
    : basis_(std::move(basis)), coeffs_(static_cast<std::size_t>(basis_->size()), 0.0) {}

HierSplineFunction::HierSplineFunction(std::shared_ptr<const HierBasis> basis, std::vector<double> coefficients)
    : basis_(std::move(basis)), coeffs_(std::move(coefficients)) {
  if (static_cast<std::int64_t>(coeffs_.size()) != basis_->size())
    throw Error("coefficient count does not match the basis size");
}

double HierSplineFunction::coefficient(FunctionId f) const {
  const std::int64_t p = basis_->position(f);
  return p < 0 ? 0.0 : coeffs_[static_cast<std::size_t>(p)];
}

double HierSplineFunction::eval(std::span<const double> x) const {
  double sum = 0.0;
  for (int l = 0; l < basis_->depth(); ++l)
    basis_->levels().level(l).for_each_nonzero(x, [&](std::int64_t f, double v) {
      const std::int64_t p = basis_->position({l, f});
      if (p >= 0) sum += coeffs_[static_cast<std::size_t>(p)] * v;
    });
  return sum;
}

MultiLevelSpline HierSplineFunction::to_multilevel() const {
  MultiLevelSpline s(basis_->hierarchy().level_sequence(), basis_->depth());
  const auto fs = basis_->functions();
  for (std::size_t i = 0; i < fs.size(); ++i) s[fs[i]] = coeffs_[i];
  return s;
}

HierSplineFunction express_in_basis(const MultiLevelSpline& s, std::shared_ptr<const HierBasis> target) {
  const int n = target->depth();
  if (s.depth() > n) throw Error("spline has more levels than the target basis");
  const LevelSequence& levels = target->levels();
  for (int l = 0; l < s.depth(); ++l)
    if (!(s.levels().level(l) == levels.level(l)))
      throw RefinementMismatch("spline and target basis use different knot vectors at level " + std::to_string(l));

  std::vector<std::vector<double>> work;
  std::vector<std::vector<std::uint8_t>> touched;
  for (int l = 0; l < n; ++l) {
    const auto size = static_cast<std::size_t>(levels.level(l).num_functions());
    work.emplace_back(size, 0.0);
    touched.emplace_back(size, 0);
    if (l < s.depth()) {
      const auto src = s.level(l);
      for (std::size_t f = 0; f < size; ++f) {
        work.back()[f] = src[f];
        touched.back()[f] = src[f] != 0.0;
      }
    }
  }

  HierSplineFunction out(target);
  auto coeffs = out.coefficients();
  for (int l = 0; l < n; ++l) {
    auto& w = work[static_cast<std::size_t>(l)];
    const auto& t = touched[static_cast<std::size_t>(l)];
    for (std::size_t f = 0; f < w.size(); ++f) {
      if (!t[f]) continue;
      const FunctionId id{l, static_cast<std::int64_t>(f)};
      switch (target->state(id)) {
        case FunctionState::Active:
          coeffs[static_cast<std::size_t>(target->position(id))] += w[f];
          break;
        case FunctionState::Deactivated:
          if (l + 1 >= n)
            throw InvariantViolation("deactivated function on the finest level " + std::to_string(l));
          for (const auto& term : levels.children(id, false)) {
            const auto ci = static_cast<std::size_t>(term.id.index);
            work[static_cast<std::size_t>(l + 1)][ci] += term.coefficient * w[f];
            touched[static_cast<std::size_t>(l + 1)][ci] = 1;
          }
          break;
        case FunctionState::Inactive:
          throw InvariantViolation("expansion reached function " + std::to_string(f) + " of level " +
                                   std::to_string(l) + ", which is not in the " + flavor_name(target->flavor()) +
                                   " basis");
      }
    }
  }
  return out;
}

HierSplineFunction expand_deactivated(FunctionId beta, std::shared_ptr<const HierBasis> target) {
  if (beta.level >= target->depth() || target->state(beta) != FunctionState::Deactivated)
    throw Error("function " + std::to_string(beta.index) + " of level " + std::to_string(beta.level) +
                " is not deactivated in the " + flavor_name(target->flavor()) + " basis");
  MultiLevelSpline s(target->hierarchy().level_sequence(), beta.level + 1);
  s[beta] = 1.0;
  return express_in_basis(s, std::move(target));
}

}  // namespace hbs
