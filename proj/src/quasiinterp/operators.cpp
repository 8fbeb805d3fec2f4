#include "hbs/quasiinterp/operators.hpp"

#include <optional>

#include "hbs/common/errors.hpp"
#include "hbs/common/parallel.hpp"

namespace hbs {

LevelQuasiInterpolant::LevelQuasiInterpolant(std::shared_ptr<const LevelSequence> levels, int level, CellSet omega,
                                             QuasiInterpConfig config)
    : levels_(std::move(levels)), level_(level), omega_(std::move(omega)) {
  const TensorLevel& lv = tensor_level();
  if (omega_.level() != level || omega_.capacity() != lv.num_cells())
    throw Error("omega domain does not belong to level " + std::to_string(level));
  slot_.assign(static_cast<std::size_t>(lv.num_functions()), -1);
  std::vector<std::int64_t> chosen(static_cast<std::size_t>(lv.num_functions()), -1);
  // Cells in increasing order, so the first cell seeing a function is the
  // smallest one in its support.
  std::vector<std::int64_t> cells;
  for (const std::int64_t c : omega_.members()) {
    bool used = false;
    for_each_index(lv.functions_on_cell(c), lv.function_strides(), [&](std::int64_t f, const MultiIndex&) {
      auto& q = chosen[static_cast<std::size_t>(f)];
      if (q < 0) {
        q = c;
        used = true;
      }
    });
    if (used) cells.push_back(c);
  }
  std::vector<std::optional<LocalProjection>> built(cells.size());
  parallel_for(static_cast<std::int64_t>(cells.size()), [&](std::int64_t k) {
    built[static_cast<std::size_t>(k)].emplace(lv, cells[static_cast<std::size_t>(k)], config.extra_points);
  });
  for (auto& b : built) projections_.push_back(std::move(*b));

  std::size_t cursor = 0;
  for (std::int64_t f = 0; f < lv.num_functions(); ++f) {
    const std::int64_t q = chosen[static_cast<std::size_t>(f)];
    if (q < 0) continue;
    slot_[static_cast<std::size_t>(f)] = static_cast<std::int64_t>(members_.size());
    members_.push_back(f);
    cursor = static_cast<std::size_t>(std::lower_bound(cells.begin(), cells.end(), q) - cells.begin());
    member_cell_.push_back(static_cast<int>(cursor));
    const int pos = projections_[cursor].local_position(f);
    if (pos < 0) throw InvariantViolation("chosen cell outside the support");
    member_local_.push_back(pos);
  }
}

std::int64_t LevelQuasiInterpolant::chosen_cell(std::int64_t beta) const {
  const std::int64_t s = slot_[static_cast<std::size_t>(beta)];
  return s < 0 ? -1 : projections_[static_cast<std::size_t>(member_cell_[static_cast<std::size_t>(s)])].cell();
}

double LevelQuasiInterpolant::dual(std::int64_t beta, const ScalarFunction& f) const {
  const std::int64_t s = slot_[static_cast<std::size_t>(beta)];
  if (s < 0) throw Error("function " + std::to_string(beta) + " is not in B_{l,omega} at level " + std::to_string(level_));
  const auto u = static_cast<std::size_t>(s);
  return projections_[static_cast<std::size_t>(member_cell_[u])].coefficients(f)(member_local_[u]);
}

std::vector<double> LevelQuasiInterpolant::apply(const ScalarFunction& f) const {
  std::vector<Eigen::VectorXd> local(projections_.size());
  parallel_for(static_cast<std::int64_t>(projections_.size()), [&](std::int64_t k) {
    local[static_cast<std::size_t>(k)] = projections_[static_cast<std::size_t>(k)].coefficients(f);
  });
  std::vector<double> out(static_cast<std::size_t>(tensor_level().num_functions()), 0.0);
  for (std::size_t m = 0; m < members_.size(); ++m)
    out[static_cast<std::size_t>(members_[m])] = local[static_cast<std::size_t>(member_cell_[m])](member_local_[m]);
  return out;
}

MultiscaleQuasiInterpolant::MultiscaleQuasiInterpolant(std::shared_ptr<const SubdomainHierarchy> h,
                                                       QuasiInterpConfig config)
    : h_(std::move(h)), omegas_(compute_omega_domains(*h_)), admissibility_(check_admissibility(*h_, omegas_)) {
  for (int l = 0; l < h_->depth(); ++l) ops_.emplace_back(h_->level_sequence(), l, omegas_.at(l), config);
  tilde_ = std::make_shared<const HierBasis>(build_refinable_basis(h_));
}

MultiLevelSpline MultiscaleQuasiInterpolant::recursion(const ScalarFunction& f) const {
  MultiLevelSpline s(h_->level_sequence(), depth());
  for (int l = 0; l < depth(); ++l) {
    const ScalarFunction residual = [&](std::span<const double> x) { return checked_eval(f, x) - s.eval(x); };
    const std::vector<double> c = ops_[static_cast<std::size_t>(l)].apply(l == 0 ? f : residual);
    std::copy(c.begin(), c.end(), s.level(l).begin());
  }
  return s;
}

HierSplineFunction MultiscaleQuasiInterpolant::apply(const ScalarFunction& f) const {
  if (!omegas_.nested) throw AdmissibilityError("omega domains are not nested; the multiscale quasi-interpolant is not defined");
  return express_in_basis(recursion(f), tilde_);
}

MultiLevelSpline MultiscaleQuasiInterpolant::decomposition(int l, const ScalarFunction& f) const {
  MultiLevelSpline s(h_->level_sequence(), depth());
  std::vector<double> prev = ops_[static_cast<std::size_t>(l)].apply(f);
  std::copy(prev.begin(), prev.end(), s.level(l).begin());
  for (int k = l + 1; k < depth(); ++k) {
    // Plain P_{k-1} f, evaluated from its own coefficients.
    const TensorLevel& coarse = h_->level(k - 1);
    const ScalarFunction residual = [&](std::span<const double> x) {
      double v = 0.0;
      coarse.for_each_nonzero(x, [&](std::int64_t g, double b) { v += prev[static_cast<std::size_t>(g)] * b; });
      return checked_eval(f, x) - v;
    };
    const std::vector<double> c = ops_[static_cast<std::size_t>(k)].apply(residual);
    std::copy(c.begin(), c.end(), s.level(k).begin());
    if (k + 1 < depth()) prev = ops_[static_cast<std::size_t>(k)].apply(f);
  }
  return s;
}

}  // namespace hbs
