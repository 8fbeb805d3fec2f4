#include "hbs/hierarchy/basis.hpp"

#include <algorithm>

#include "hbs/common/errors.hpp"

namespace hbs {

const char* flavor_name(Flavor f) { return f == Flavor::Classical ? "H" : "H~"; }

HierBasis::HierBasis(std::shared_ptr<const SubdomainHierarchy> h, Flavor flavor,
                     std::vector<std::vector<FunctionState>> states)
    : h_(std::move(h)), flavor_(flavor), states_(std::move(states)) {
  if (static_cast<int>(states_.size()) != h_->depth()) throw Error("basis state table has the wrong depth");
  for (int l = 0; l < h_->depth(); ++l) {
    const auto& st = states_[static_cast<std::size_t>(l)];
    if (static_cast<std::int64_t>(st.size()) != h_->level(l).num_functions())
      throw Error("basis state table has the wrong size at level " + std::to_string(l));
    std::vector<std::int64_t> slots(st.size(), -1);
    for (std::size_t f = 0; f < st.size(); ++f) {
      if (st[f] != FunctionState::Active) continue;
      slots[f] = static_cast<std::int64_t>(active_.size());
      active_.push_back({l, static_cast<std::int64_t>(f)});
    }
    slots_.push_back(std::move(slots));
  }
}

std::vector<FunctionId> HierBasis::deactivated(int level) const {
  std::vector<FunctionId> out;
  const auto& st = states_[static_cast<std::size_t>(level)];
  for (std::size_t f = 0; f < st.size(); ++f)
    if (st[f] == FunctionState::Deactivated) out.push_back({level, static_cast<std::int64_t>(f)});
  return out;
}

std::vector<FunctionId> HierBasis::active_on_level(int level) const {
  std::vector<FunctionId> out;
  for (const auto& f : active_)
    if (f.level == level) out.push_back(f);
  return out;
}

namespace {

std::vector<std::vector<FunctionState>> empty_states(const SubdomainHierarchy& h) {
  std::vector<std::vector<FunctionState>> st;
  for (int l = 0; l < h.depth(); ++l)
    st.emplace_back(static_cast<std::size_t>(h.level(l).num_functions()), FunctionState::Inactive);
  return st;
}

std::vector<FunctionId> whole_level(const TensorLevel& lv) {
  std::vector<FunctionId> out;
  out.reserve(static_cast<std::size_t>(lv.num_functions()));
  for (std::int64_t f = 0; f < lv.num_functions(); ++f) out.push_back({lv.level(), f});
  return out;
}

}  // namespace

ClassicalBasis build_hierarchical_basis(std::shared_ptr<const SubdomainHierarchy> h) {
  const int n = h->depth();
  auto states = empty_states(*h);

  // Recursive construction.
  std::vector<FunctionId> current = whole_level(h->level(0));
  for (int l = 0; l + 1 < n; ++l) {
    std::vector<FunctionId> next;
    for (const FunctionId& b : current) {
      if (h->support_in(l + 1, b))
        states[static_cast<std::size_t>(b.level)][static_cast<std::size_t>(b.index)] = FunctionState::Deactivated;
      else
        next.push_back(b);
    }
    const TensorLevel& fine = h->level(l + 1);
    for (std::int64_t f = 0; f < fine.num_functions(); ++f)
      if (h->contains(l + 1, fine.support(f))) next.push_back({l + 1, f});
    current = std::move(next);
  }
  for (const FunctionId& b : current)
    states[static_cast<std::size_t>(b.level)][static_cast<std::size_t>(b.index)] = FunctionState::Active;
  std::sort(current.begin(), current.end());

  // Closed form: supp in Omega_l and not in Omega_{l+1}.
  std::vector<FunctionId> closed;
  for (int l = 0; l < n; ++l) {
    const TensorLevel& lv = h->level(l);
    for (std::int64_t f = 0; f < lv.num_functions(); ++f) {
      const Box s = lv.support(f);
      if (h->contains(l, s) && !h->contains(l + 1, s)) closed.push_back({l, f});
    }
  }
  if (closed != current)
    throw InvariantViolation("recursive and closed-form constructions of H differ (" +
                             std::to_string(current.size()) + " against " + std::to_string(closed.size()) +
                             " functions)");

  HierarchicalMesh mesh(*h);
  return {HierBasis(h, Flavor::Classical, std::move(states)), std::move(mesh)};
}

HierBasis build_refinable_basis(std::shared_ptr<const SubdomainHierarchy> h) {
  const int n = h->depth();
  auto states = empty_states(*h);
  std::vector<FunctionId> current = whole_level(h->level(0));
  for (int l = 0; l + 1 < n; ++l) {
    std::vector<FunctionId> next;
    std::vector<std::uint8_t> added(static_cast<std::size_t>(h->level(l + 1).num_functions()), 0);
    std::vector<FunctionId> kids;
    for (const FunctionId& b : current) {
      if (!h->support_in(l + 1, b)) {
        next.push_back(b);
        continue;
      }
      if (b.level != l) throw InvariantViolation("a function of level " + std::to_string(b.level) +
                                                 " was deactivated at step " + std::to_string(l));
      states[static_cast<std::size_t>(b.level)][static_cast<std::size_t>(b.index)] = FunctionState::Deactivated;
      for (const auto& t : h->levels().children(b, false)) {
        auto& flag = added[static_cast<std::size_t>(t.id.index)];
        if (!flag) kids.push_back(t.id);
        flag = 1;
      }
    }
    std::sort(kids.begin(), kids.end());
    next.insert(next.end(), kids.begin(), kids.end());
    current = std::move(next);
  }
  for (const FunctionId& b : current)
    states[static_cast<std::size_t>(b.level)][static_cast<std::size_t>(b.index)] = FunctionState::Active;
  return HierBasis(std::move(h), Flavor::Refinable, std::move(states));
}

}  // namespace hbs
