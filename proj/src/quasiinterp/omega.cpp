#include "hbs/quasiinterp/omega.hpp"

#include "hbs/common/errors.hpp"

namespace hbs {

namespace {

/// Every cell of `fine` (a level below `coarse`) lies in the closure of `coarse`.
bool region_covers(const Region& coarse, const TensorLevel& fine_level, const CellSet& fine) {
  for (const std::int64_t c : fine.members())
    if (!coarse.contains(fine_level.cell_box(c))) return false;
  return true;
}

}  // namespace

OmegaDomains compute_omega_domains(const SubdomainHierarchy& h) {
  OmegaDomains out;
  for (int l = 0; l < h.depth(); ++l) {
    const TensorLevel& lv = h.level(l);
    CellSet w(lv);
    for (std::int64_t c = 0; c < lv.num_cells(); ++c)
      if (h.contains(l, lv.support_extension(c))) w.insert(c);
    out.omega.push_back(std::move(w));
  }
  for (int l = 1; l < h.depth() && out.nested; ++l) {
    const Region coarse(h.level(l - 1), out.at(l - 1));
    out.nested = region_covers(coarse, h.level(l), out.at(l));
  }
  return out;
}

Admissibility check_admissibility(const SubdomainHierarchy& h, const OmegaDomains& omegas) {
  Admissibility a;
  a.omega_nested = omegas.nested;
  a.strictly_admissible = true;
  // Omega_n is empty, so only l = 1 .. n-1 can fail.
  for (int l = 1; l < h.depth() && a.strictly_admissible; ++l)
    a.strictly_admissible = h.subdomain_cells(l).is_subset_of(omegas.at(l - 1));
  if (a.strictly_admissible && !a.omega_nested)
    throw InvariantViolation("strictly admissible hierarchy with non-nested omega domains");
  return a;
}

std::vector<std::int64_t> omega_functions(const TensorLevel& level, const CellSet& omega) {
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(level.num_functions()), 0);
  for (const std::int64_t c : omega.members())
    for_each_index(level.functions_on_cell(c), level.function_strides(),
                   [&](std::int64_t f, const MultiIndex&) { hit[static_cast<std::size_t>(f)] = 1; });
  std::vector<std::int64_t> out;
  for (std::size_t f = 0; f < hit.size(); ++f)
    if (hit[f]) out.push_back(static_cast<std::int64_t>(f));
  return out;
}

std::vector<FunctionId> omega_parent_violations(const SubdomainHierarchy& h, const OmegaDomains& omegas) {
  std::vector<FunctionId> bad;
  for (int l = 0; l + 1 < h.depth(); ++l)
    for (const std::int64_t f : omega_functions(h.level(l + 1), omegas.at(l + 1))) {
      const FunctionId beta{l + 1, f};
      bool found = false;
      for (const auto& p : h.levels().parents(beta, false))
        if (h.support_in(l + 1, p.id)) {
          found = true;
          break;
        }
      if (!found) bad.push_back(beta);
    }
  return bad;
}

}  // namespace hbs
