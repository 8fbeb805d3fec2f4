#include "hbs/hierarchy/subdomain_hierarchy.hpp"

#include <string>

#include "hbs/common/errors.hpp"

namespace hbs {

namespace {

std::string cell_name(const TensorLevel& lv, std::int64_t c) {
  const MultiIndex m = lv.cell_multi(c);
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

}  // namespace

SubdomainHierarchy::SubdomainHierarchy(std::shared_ptr<const LevelSequence> levels, std::vector<CellSet> subdomains)
    : levels_(std::move(levels)) {
  if (!levels_) throw ValidationError("hierarchy", "missing level sequence");
  const int n = static_cast<int>(subdomains.size()) + 1;
  if (n > levels_->depth())
    throw ValidationError("hierarchy", "depth " + std::to_string(n) + " exceeds the " +
                                           std::to_string(levels_->depth()) + " available levels");
  regions_.reserve(static_cast<std::size_t>(n + 1));
  regions_.emplace_back(levels_->level(0), CellSet::full(levels_->level(0)));
  for (int l = 1; l < n; ++l) {
    const TensorLevel& lv = levels_->level(l - 1);
    CellSet& cells = subdomains[static_cast<std::size_t>(l - 1)];
    if (cells.level() != l - 1 || cells.capacity() != lv.num_cells())
      throw ValidationError("hierarchy", "subdomain " + std::to_string(l) + " must be a cell set of level " +
                                             std::to_string(l - 1),
                            "level " + std::to_string(l));
    if (l >= 2) {
      const Region& outer = regions_.back();
      for (const std::int64_t c : cells.members())
        if (!outer.contains(lv.cell_box(c)))
          throw ValidationError("hierarchy nesting",
                                "subdomain " + std::to_string(l) + " is not contained in subdomain " +
                                    std::to_string(l - 1),
                                "level " + std::to_string(l - 1) + " cell " + cell_name(lv, c));
    }
    regions_.emplace_back(lv, std::move(cells));
  }
  regions_.emplace_back(levels_->level(n - 1), CellSet(levels_->level(n - 1)));
}

SubdomainHierarchy SubdomainHierarchy::trivial(std::shared_ptr<const LevelSequence> levels) {
  return SubdomainHierarchy(std::move(levels), {});
}

const Region& SubdomainHierarchy::omega(int l) const {
  if (l < 0 || l > depth()) throw Error("subdomain index " + std::to_string(l) + " out of range");
  return regions_[static_cast<std::size_t>(l)];
}

std::vector<CellSet> SubdomainHierarchy::subdomains() const {
  std::vector<CellSet> out;
  for (int l = 1; l < depth(); ++l) out.push_back(regions_[static_cast<std::size_t>(l)].cells());
  return out;
}

bool SubdomainHierarchy::contains(int l, const Box& box) const {
  if (l < 0) throw Error("negative subdomain index");
  if (l == 0) return true;
  if (l >= depth()) return false;
  return regions_[static_cast<std::size_t>(l)].contains(box);
}

SubdomainHierarchy SubdomainHierarchy::truncated(int new_depth) const {
  if (new_depth < 1 || new_depth > depth()) throw Error("invalid truncation depth " + std::to_string(new_depth));
  std::vector<CellSet> subs = subdomains();
  subs.resize(static_cast<std::size_t>(new_depth - 1));
  return SubdomainHierarchy(levels_, std::move(subs));
}

bool SubdomainHierarchy::operator==(const SubdomainHierarchy& other) const {
  if (depth() != other.depth()) return false;
  for (int l = 0; l < depth(); ++l)
    if (!(level(l) == other.level(l))) return false;
  return subdomains() == other.subdomains();
}

HierarchicalMesh::HierarchicalMesh(const SubdomainHierarchy& h) {
  for (int l = 0; l < h.depth(); ++l) {
    const TensorLevel& lv = h.level(l);
    CellSet active(lv);
    for (std::int64_t c = 0; c < lv.num_cells(); ++c) {
      const Box b = lv.cell_box(c);
      if (h.contains(l, b) && !h.contains(l + 1, b)) active.insert(c);
    }
    active_.push_back(std::move(active));
  }
}

std::vector<CellId> HierarchicalMesh::cells() const {
  std::vector<CellId> out;
  for (std::size_t l = 0; l < active_.size(); ++l)
    for (const std::int64_t c : active_[l].members()) out.push_back({static_cast<int>(l), c});
  return out;
}

std::int64_t HierarchicalMesh::size() const {
  std::int64_t n = 0;
  for (const auto& a : active_) n += a.size();
  return n;
}

Rational HierarchicalMesh::exact_volume(const LevelSequence& levels) const {
  Rational total = 0;
  for (std::size_t l = 0; l < active_.size(); ++l) {
    const TensorLevel& lv = levels.level(static_cast<int>(l));
    for (const std::int64_t c : active_[l].members()) {
      const Box b = lv.cell_box(c);
      Rational v = 1;
      for (int i = 0; i < b.dim(); ++i)
        v *= to_rational(b.hi[static_cast<std::size_t>(i)]) - to_rational(b.lo[static_cast<std::size_t>(i)]);
      total += v;
    }
  }
  return total;
}

namespace {

template <class Inside>
std::vector<CellId> collect(const std::vector<CellSet>& active, const LevelSequence& levels,
                            std::span<const double> x, Inside&& inside) {
  std::vector<CellId> out;
  for (std::size_t l = 0; l < active.size(); ++l) {
    const TensorLevel& lv = levels.level(static_cast<int>(l));
    IndexRange r;
    for (int i = 0; i < lv.dim(); ++i) {
      const auto& kv = lv.direction(i);
      const int k = kv.find_interval(x[static_cast<std::size_t>(i)]);
      r.lo.push_back(std::max(0, k - 1));
      r.hi.push_back(std::min(kv.num_intervals(), k + 2));
    }
    for_each_index(r, lv.cell_strides(), [&](std::int64_t c, const MultiIndex&) {
      if (active[l].contains(c) && inside(lv.cell_box(c))) out.push_back({static_cast<int>(l), c});
    });
  }
  return out;
}

}  // namespace

std::vector<CellId> HierarchicalMesh::cells_containing(const LevelSequence& levels, std::span<const double> x) const {
  return collect(active_, levels, x, [&](const Box& b) { return b.contains_point(x); });
}

std::vector<CellId> HierarchicalMesh::cells_with_interior_point(const LevelSequence& levels,
                                                               std::span<const double> x) const {
  return collect(active_, levels, x, [&](const Box& b) {
    for (int i = 0; i < b.dim(); ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (!(b.lo[u] < x[u] && x[u] < b.hi[u])) return false;
    }
    return true;
  });
}

SubdomainHierarchy hierarchy_from_mesh(std::shared_ptr<const LevelSequence> levels,
                                       const std::vector<CellSet>& active_cells) {
  const int n = static_cast<int>(active_cells.size());
  if (n < 1) throw ValidationError("mesh", "no levels");
  if (n > levels->depth()) throw ValidationError("mesh", "more levels than the level sequence provides");
  std::vector<CellSet> subs;
  // Omega_{l} cells at level l - 1: inside Omega_{l-1} and not active.
  std::vector<Region> regions;
  regions.emplace_back(levels->level(0), CellSet::full(levels->level(0)));
  for (int l = 1; l < n; ++l) {
    const TensorLevel& lv = levels->level(l - 1);
    const CellSet& act = active_cells[static_cast<std::size_t>(l - 1)];
    if (act.level() != l - 1 || act.capacity() != lv.num_cells())
      throw ValidationError("mesh", "active cell set has the wrong level", "level " + std::to_string(l - 1));
    CellSet next(lv);
    for (std::int64_t c = 0; c < lv.num_cells(); ++c)
      if (!act.contains(c) && regions.back().contains(lv.cell_box(c))) next.insert(c);
    regions.emplace_back(lv, next);
    subs.push_back(std::move(next));
  }
  return SubdomainHierarchy(std::move(levels), std::move(subs));
}

}  // namespace hbs
