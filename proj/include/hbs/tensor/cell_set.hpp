#pragma once

#include <cstdint>
#include <vector>

#include "hbs/tensor/tensor_level.hpp"

namespace hbs {

/// A set of cells of one level, stored as a dense membership mask.
class CellSet {
 public:
  CellSet() = default;
  /// Empty set over the cells of `level`.
  explicit CellSet(const TensorLevel& level);
  static CellSet full(const TensorLevel& level);

  int level() const { return level_; }
  std::span<const int> extents() const { return extents_; }
  std::int64_t capacity() const { return static_cast<std::int64_t>(mask_.size()); }
  std::int64_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool is_full() const { return count_ == capacity(); }

  bool contains(std::int64_t cell) const { return mask_[static_cast<std::size_t>(cell)] != 0; }
  void insert(std::int64_t cell);
  void erase(std::int64_t cell);
  /// Inserts every cell of `range`.
  void insert(const IndexRange& range);

  /// Members in increasing linear order.
  std::vector<std::int64_t> members() const;

  bool is_subset_of(const CellSet& other) const;
  CellSet& operator|=(const CellSet& other);
  CellSet& operator-=(const CellSet& other);

  bool operator==(const CellSet& other) const {
    return level_ == other.level_ && extents_ == other.extents_ && mask_ == other.mask_;
  }

 private:
  void require_compatible(const CellSet& other) const;

  int level_ = 0;
  std::vector<int> extents_;
  std::vector<std::int64_t> strides_;
  std::vector<std::uint8_t> mask_;
  std::int64_t count_ = 0;
};

/// Closed region formed by the closures of the cells of a CellSet, with
/// d-dimensional prefix sums for box containment queries. Keeps a
/// reference to the level, which must outlive it.
class Region {
 public:
  Region(const TensorLevel& level, CellSet cells);

  const CellSet& cells() const { return cells_; }
  const TensorLevel& level() const { return *level_; }
  bool empty() const { return cells_.empty(); }

  /// Number of member cells within an index range.
  std::int64_t count(const IndexRange& range) const;
  /// Whether a box of positive volume lies inside the region: every cell
  /// that overlaps it with positive measure is a member.
  bool contains(const Box& box) const;
  bool contains_cell_of(const TensorLevel& other, std::int64_t cell) const {
    return contains(other.cell_box(cell));
  }
  /// Whether the point lies in the closure of some member cell.
  bool contains_point(std::span<const double> x) const;

 private:
  const TensorLevel* level_;
  CellSet cells_;
  std::vector<int> pext_;
  std::vector<std::int64_t> pstride_;
  std::vector<std::int32_t> prefix_;
};

}  // namespace hbs
