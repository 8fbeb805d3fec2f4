#pragma once

#include <vector>

#include "hbs/common/rational.hpp"
#include "hbs/hierarchy/subdomain_hierarchy.hpp"

namespace hbs {

/// Partition-of-unity weight of one function.
struct Weight {
  bool defined = false;   ///< supp beta inside Omega_l
  bool positive = false;  ///< some positive-weight deactivated parent exists (or level 0)
  Rational exact;
  double value = 0.0;
};

/// Weights a_beta for every level-l function with support in Omega_l.
class WeightTable {
 public:
  explicit WeightTable(std::vector<std::vector<Weight>> table) : table_(std::move(table)) {}

  int depth() const { return static_cast<int>(table_.size()); }
  bool defined(FunctionId f) const {
    return f.level < depth() && table_[static_cast<std::size_t>(f.level)][static_cast<std::size_t>(f.index)].defined;
  }
  /// Throws when the weight is not defined for f.
  const Weight& at(FunctionId f) const;
  std::span<const Weight> level(int l) const { return table_[static_cast<std::size_t>(l)]; }

 private:
  std::vector<std::vector<Weight>> table_;
};

/// a = 1 on level 0 and a_{beta_{l+1}} = sum of a_{beta_l} c_{beta_{l+1}}(beta_l)
/// over the parents beta_l with support in Omega_{l+1}, in exact rational
/// arithmetic. The positivity flag is propagated structurally and checked
/// against the exact value.
WeightTable compute_weights(const SubdomainHierarchy& h);

/// Whether every parent of beta that has positive weight and support in
/// Omega_l has support outside Omega_{l+1}, where l + 1 is the level of beta.
/// Parents are enumerated from the interval characterization, independently
/// of the cached two-scale data. Requires level >= 1 and supp beta inside
/// Omega_{l+1}.
bool zero_weight_by_characterization(FunctionId beta, const SubdomainHierarchy& h, const WeightTable& weights);

}  // namespace hbs
