#pragma once

#include <memory>
#include <vector>

#include "hbs/hierarchy/subdomain_hierarchy.hpp"

namespace hbs {

/// Enlargement Omega*_l = Omega_l + additions[l - 1] for l = 1 .. n, where
/// additions[l - 1] is a cell set of level l - 1. A nonempty Omega*_n makes
/// the result one level deeper; if the level sequence has no level n it is
/// extended by dyadic refinement. Throws ValidationError when the result is
/// not nested.
SubdomainHierarchy enlarge_hierarchy(const SubdomainHierarchy& h, const std::vector<CellSet>& additions);

}  // namespace hbs
