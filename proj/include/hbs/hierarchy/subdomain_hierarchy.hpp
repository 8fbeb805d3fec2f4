#pragma once

#include <memory>
#include <vector>

#include "hbs/common/rational.hpp"
#include "hbs/tensor/cell_set.hpp"
#include "hbs/tensor/level_sequence.hpp"

namespace hbs {

/// Nested closed subdomains Omega = Omega_0 > Omega_1 > ... > Omega_n = {}
/// where Omega_l (1 <= l <= n-1) is a union of cells of level l - 1.
class SubdomainHierarchy {
 public:
  /// `subdomains[k]` is Omega_{k+1} as a cell set of level k; the depth is
  /// subdomains.size() + 1. Throws ValidationError("hierarchy nesting")
  /// when Omega_{l+1} is not contained in Omega_l, and
  /// ValidationError("hierarchy") for depth or level mismatches.
  SubdomainHierarchy(std::shared_ptr<const LevelSequence> levels, std::vector<CellSet> subdomains);

  /// Depth one: Omega_1 is empty.
  static SubdomainHierarchy trivial(std::shared_ptr<const LevelSequence> levels);

  int depth() const { return static_cast<int>(regions_.size()) - 1; }
  int dim() const { return levels_->dim(); }
  const LevelSequence& levels() const { return *levels_; }
  const std::shared_ptr<const LevelSequence>& level_sequence() const { return levels_; }
  const TensorLevel& level(int l) const { return levels_->level(l); }

  /// Omega_l for 0 <= l <= n as a region (level 0 cells for l = 0, level
  /// l - 1 cells otherwise); empty for l >= n.
  const Region& omega(int l) const;
  /// Cells of Omega_l at level l - 1, for 1 <= l <= n - 1.
  const CellSet& subdomain_cells(int l) const { return omega(l).cells(); }
  /// The subdomain list as passed to the constructor.
  std::vector<CellSet> subdomains() const;

  bool contains(int l, const Box& box) const;
  /// supp f inside Omega_l, for f of any level.
  bool support_in(int l, FunctionId f) const { return contains(l, level(f.level).support(f.index)); }
  bool cell_in(int l, CellId c) const { return contains(l, level(c.level).cell_box(c.index)); }

  /// The hierarchy Omega_0 > ... > Omega_{depth-1} > {}.
  SubdomainHierarchy truncated(int depth) const;

  bool operator==(const SubdomainHierarchy& other) const;

 private:
  std::shared_ptr<const LevelSequence> levels_;
  std::vector<Region> regions_;  // Omega_0 .. Omega_n
};

/// Active cells per level: Q in Q_l with Q inside Omega_l but not inside
/// Omega_{l+1}.
class HierarchicalMesh {
 public:
  explicit HierarchicalMesh(const SubdomainHierarchy& h);

  int depth() const { return static_cast<int>(active_.size()); }
  const CellSet& active(int l) const { return active_[static_cast<std::size_t>(l)]; }
  std::vector<CellId> cells() const;
  std::int64_t size() const;

  /// Total volume as an exact rational.
  Rational exact_volume(const LevelSequence& levels) const;
  /// Active cells whose closure contains x.
  std::vector<CellId> cells_containing(const LevelSequence& levels, std::span<const double> x) const;
  /// Active cells whose interior contains x.
  std::vector<CellId> cells_with_interior_point(const LevelSequence& levels, std::span<const double> x) const;

  bool operator==(const HierarchicalMesh& other) const { return active_ == other.active_; }

 private:
  std::vector<CellSet> active_;
};

/// Rebuilds the subdomains from the active cells alone: Omega_l consists
/// of the level l - 1 cells inside Omega_{l-1} that are not active.
SubdomainHierarchy hierarchy_from_mesh(std::shared_ptr<const LevelSequence> levels,
                                       const std::vector<CellSet>& active_cells);

}  // namespace hbs
