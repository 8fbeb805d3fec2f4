#pragma once

#include <cstdint>
#include <vector>

#include "hbs/hierarchy/subdomain_hierarchy.hpp"

namespace hbs {

/// omega_l for l = 0 .. n-1: the level-l cells whose support extension
/// lies in Omega_l.
struct OmegaDomains {
  std::vector<CellSet> omega;
  /// omega_{n-1} inside ... inside omega_0.
  bool nested = true;

  int depth() const { return static_cast<int>(omega.size()); }
  const CellSet& at(int l) const { return omega[static_cast<std::size_t>(l)]; }
};

OmegaDomains compute_omega_domains(const SubdomainHierarchy& h);

struct Admissibility {
  bool strictly_admissible = false;  ///< Omega_l inside omega_{l-1} for all l
  bool omega_nested = false;
};

/// Throws InvariantViolation if strict admissibility holds without
/// omega nesting.
Admissibility check_admissibility(const SubdomainHierarchy& h, const OmegaDomains& omegas);

/// B_{l,omega}: functions of `level` whose support contains a cell of
/// `omega`, in increasing order.
std::vector<std::int64_t> omega_functions(const TensorLevel& level, const CellSet& omega);

/// Functions of B_{l+1,omega_{l+1}} with no parent whose support lies in
/// Omega_{l+1}, over all l. Empty whenever the levels are dyadic.
std::vector<FunctionId> omega_parent_violations(const SubdomainHierarchy& h, const OmegaDomains& omegas);

}  // namespace hbs
