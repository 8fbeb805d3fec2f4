#include "hbs/hierarchy/weights.hpp"

#include "hbs/common/errors.hpp"
#include "hbs/common/parallel.hpp"
#include "hbs/univariate/two_scale.hpp"

namespace hbs {

const Weight& WeightTable::at(FunctionId f) const {
  if (!defined(f))
    throw Error("weight of function " + std::to_string(f.index) + " at level " + std::to_string(f.level) +
                " is not defined");
  return table_[static_cast<std::size_t>(f.level)][static_cast<std::size_t>(f.index)];
}

WeightTable compute_weights(const SubdomainHierarchy& h) {
  const int n = h.depth();
  std::vector<std::vector<Weight>> table(static_cast<std::size_t>(n));
  auto& base = table[0];
  base.resize(static_cast<std::size_t>(h.level(0).num_functions()));
  for (auto& w : base) {
    w.defined = true;
    w.positive = true;
    w.exact = 1;
    w.value = 1.0;
  }
  for (int l = 0; l + 1 < n; ++l) {
    const TensorLevel& coarse = h.level(l);
    const TensorLevel& fine = h.level(l + 1);
    // Parents taking part in the sum: support inside Omega_{l+1}.
    std::vector<std::uint8_t> deact(static_cast<std::size_t>(coarse.num_functions()));
    parallel_for(coarse.num_functions(), [&](std::int64_t f) {
      deact[static_cast<std::size_t>(f)] = h.contains(l + 1, coarse.support(f));
    });
    const auto& prev = table[static_cast<std::size_t>(l)];
    auto& next = table[static_cast<std::size_t>(l + 1)];
    next.resize(static_cast<std::size_t>(fine.num_functions()));
    parallel_for(fine.num_functions(), [&](std::int64_t f) {
      Weight& w = next[static_cast<std::size_t>(f)];
      if (!h.contains(l + 1, fine.support(f))) return;
      w.defined = true;
      w.exact = 0;
      for (const auto& t : h.levels().parents({l + 1, f})) {
        const auto pi = static_cast<std::size_t>(t.id.index);
        if (!deact[pi]) continue;
        const Weight& pw = prev[pi];
        if (!pw.defined) throw InvariantViolation("parent weight used before it is defined");
        w.exact += pw.exact * t.exact;
        w.positive = w.positive || pw.positive;
      }
      w.value = to_double(w.exact);
      if (w.positive != (w.exact > 0))
        throw InvariantViolation("structural and exact weight positivity disagree at level " +
                                 std::to_string(l + 1) + ", function " + std::to_string(f));
    });
  }
  return WeightTable(std::move(table));
}

bool zero_weight_by_characterization(FunctionId beta, const SubdomainHierarchy& h, const WeightTable& weights) {
  const int l1 = beta.level;
  if (l1 < 1 || l1 >= h.depth()) throw Error("characterization needs a function of level 1 .. n-1");
  if (!h.support_in(l1, beta)) throw Error("characterization needs supp beta inside Omega_" + std::to_string(l1));
  const TensorLevel& fine = h.level(l1);
  const TensorLevel& coarse = h.level(l1 - 1);
  const MultiIndex m = fine.function_multi(beta.index);
  IndexRange all;
  std::vector<std::vector<int>> lists;
  for (int i = 0; i < fine.dim(); ++i) {
    lists.push_back(parents_1d(m[static_cast<std::size_t>(i)], fine.direction(i), coarse.direction(i)));
    all.lo.push_back(0);
    all.hi.push_back(static_cast<int>(lists.back().size()));
  }
  std::vector<int> ext(all.hi.begin(), all.hi.end());
  bool holds = true;
  for_each_index(all, strides_for(ext), [&](std::int64_t, const MultiIndex& pos) {
    MultiIndex pm(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pm[i] = lists[i][static_cast<std::size_t>(pos[i])];
    const FunctionId parent{l1 - 1, coarse.function_index(pm)};
    if (!weights.defined(parent) || !weights.at(parent).positive) return;
    if (h.support_in(l1, parent)) holds = false;
  });
  return holds;
}

}  // namespace hbs
