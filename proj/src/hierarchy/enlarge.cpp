#include "hbs/hierarchy/enlarge.hpp"

#include "hbs/common/errors.hpp"

namespace hbs {

SubdomainHierarchy enlarge_hierarchy(const SubdomainHierarchy& h, const std::vector<CellSet>& additions) {
  const int n = h.depth();
  if (static_cast<int>(additions.size()) > n)
    throw ValidationError("enlargement", "at most " + std::to_string(n) + " subdomains can be enlarged");
  const bool deeper = static_cast<int>(additions.size()) == n && !additions.back().empty();

  std::shared_ptr<const LevelSequence> levels = h.level_sequence();
  if (deeper && levels->depth() < n + 1) levels = std::make_shared<const LevelSequence>(levels->extended(n + 1));

  std::vector<CellSet> subs = h.subdomains();
  if (deeper) subs.emplace_back(levels->level(n - 1));
  for (std::size_t k = 0; k < additions.size() && k < subs.size(); ++k) {
    const CellSet& add = additions[k];
    if (add.level() != static_cast<int>(k) || add.capacity() != subs[k].capacity())
      throw ValidationError("enlargement", "additions must be cells of level " + std::to_string(k),
                            "subdomain " + std::to_string(k + 1));
    subs[k] |= add;
  }
  return SubdomainHierarchy(std::move(levels), std::move(subs));
}

}  // namespace hbs
