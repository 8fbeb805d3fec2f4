#pragma once

#include <memory>
#include <span>
#include <vector>

#include "hbs/hierarchy/subdomain_hierarchy.hpp"

namespace hbs {

enum class Flavor {
  Classical,  ///< H: every level-l function with support in Omega_l
  Refinable,  ///< H~: children of deactivated functions only
};

const char* flavor_name(Flavor f);

enum class FunctionState : std::uint8_t {
  Inactive,     ///< never selected
  Active,       ///< member of the final basis
  Deactivated,  ///< selected at its level, replaced at the next one
};

/// A hierarchical basis over a SubdomainHierarchy: the active functions
/// in (level, index) order plus the state of every function of every level.
class HierBasis {
 public:
  HierBasis(std::shared_ptr<const SubdomainHierarchy> h, Flavor flavor,
            std::vector<std::vector<FunctionState>> states);

  Flavor flavor() const { return flavor_; }
  const SubdomainHierarchy& hierarchy() const { return *h_; }
  const std::shared_ptr<const SubdomainHierarchy>& hierarchy_ptr() const { return h_; }
  const LevelSequence& levels() const { return h_->levels(); }
  int depth() const { return h_->depth(); }

  std::span<const FunctionId> functions() const { return active_; }
  std::int64_t size() const { return static_cast<std::int64_t>(active_.size()); }
  FunctionState state(FunctionId f) const {
    return states_[static_cast<std::size_t>(f.level)][static_cast<std::size_t>(f.index)];
  }
  bool is_active(FunctionId f) const {
    return f.level < depth() && state(f) == FunctionState::Active;
  }
  /// Position of f in functions(), or -1.
  std::int64_t position(FunctionId f) const {
    if (f.level >= depth()) return -1;
    return slots_[static_cast<std::size_t>(f.level)][static_cast<std::size_t>(f.index)];
  }
  std::vector<FunctionId> deactivated(int level) const;
  std::vector<FunctionId> active_on_level(int level) const;

  /// Same active set (flavor ignored).
  bool same_functions(const HierBasis& other) const { return active_ == other.active_; }

 private:
  std::shared_ptr<const SubdomainHierarchy> h_;
  Flavor flavor_;
  std::vector<std::vector<FunctionState>> states_;
  std::vector<std::vector<std::int64_t>> slots_;
  std::vector<FunctionId> active_;
};

/// Classical basis H and the hierarchical mesh. The level-by-level
/// recursion and the closed-form selection are both evaluated; a mismatch
/// raises InvariantViolation.
struct ClassicalBasis {
  HierBasis basis;
  HierarchicalMesh mesh;
};
ClassicalBasis build_hierarchical_basis(std::shared_ptr<const SubdomainHierarchy> h);

/// The refinable basis H~: H~_0 = B_0, and H~_{l+1} keeps the members of
/// H~_l whose support is not inside Omega_{l+1} and adds the children of
/// the others.
HierBasis build_refinable_basis(std::shared_ptr<const SubdomainHierarchy> h);

}  // namespace hbs
