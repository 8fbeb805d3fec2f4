#include "hbs/tensor/cell_set.hpp"

#include "hbs/common/errors.hpp"

namespace hbs {

CellSet::CellSet(const TensorLevel& level)
    : level_(level.level()),
      extents_(level.cell_extents().begin(), level.cell_extents().end()),
      strides_(level.cell_strides().begin(), level.cell_strides().end()),
      mask_(static_cast<std::size_t>(level.num_cells()), 0) {}

CellSet CellSet::full(const TensorLevel& level) {
  CellSet s(level);
  std::fill(s.mask_.begin(), s.mask_.end(), 1);
  s.count_ = s.capacity();
  return s;
}

void CellSet::insert(std::int64_t cell) {
  auto& m = mask_[static_cast<std::size_t>(cell)];
  count_ += m == 0;
  m = 1;
}

void CellSet::erase(std::int64_t cell) {
  auto& m = mask_[static_cast<std::size_t>(cell)];
  count_ -= m != 0;
  m = 0;
}

void CellSet::insert(const IndexRange& range) {
  for_each_index(range, strides_, [&](std::int64_t c, const MultiIndex&) { insert(c); });
}

std::vector<std::int64_t> CellSet::members() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (std::size_t c = 0; c < mask_.size(); ++c)
    if (mask_[c]) out.push_back(static_cast<std::int64_t>(c));
  return out;
}

void CellSet::require_compatible(const CellSet& other) const {
  if (level_ != other.level_ || extents_ != other.extents_)
    throw Error("cell sets of different levels cannot be combined");
}

bool CellSet::is_subset_of(const CellSet& other) const {
  require_compatible(other);
  for (std::size_t c = 0; c < mask_.size(); ++c)
    if (mask_[c] && !other.mask_[c]) return false;
  return true;
}

CellSet& CellSet::operator|=(const CellSet& other) {
  require_compatible(other);
  for (std::size_t c = 0; c < mask_.size(); ++c)
    if (other.mask_[c]) insert(static_cast<std::int64_t>(c));
  return *this;
}

CellSet& CellSet::operator-=(const CellSet& other) {
  require_compatible(other);
  for (std::size_t c = 0; c < mask_.size(); ++c)
    if (other.mask_[c]) erase(static_cast<std::int64_t>(c));
  return *this;
}

Region::Region(const TensorLevel& level, CellSet cells) : level_(&level), cells_(std::move(cells)) {
  if (cells_.level() != level.level() ||
      !std::equal(cells_.extents().begin(), cells_.extents().end(), level.cell_extents().begin(),
                  level.cell_extents().end()))
    throw Error("cell set does not belong to level " + std::to_string(level.level()));
  const int d = level.dim();
  std::int64_t total = 1;
  for (int i = 0; i < d; ++i) {
    pext_.push_back(level.cell_extents()[static_cast<std::size_t>(i)] + 1);
    pstride_.push_back(total);
    total *= pext_.back();
  }
  prefix_.assign(static_cast<std::size_t>(total), 0);
  // Cell c with multi-index m lands at prefix position m + 1.
  for (std::int64_t c = 0; c < level.num_cells(); ++c) {
    if (!cells_.contains(c)) continue;
    const MultiIndex m = level.cell_multi(c);
    std::int64_t pos = 0;
    for (int i = 0; i < d; ++i) pos += (m[static_cast<std::size_t>(i)] + 1) * pstride_[static_cast<std::size_t>(i)];
    prefix_[static_cast<std::size_t>(pos)] = 1;
  }
  for (int i = 0; i < d; ++i) {
    const auto s = pstride_[static_cast<std::size_t>(i)];
    const auto e = pext_[static_cast<std::size_t>(i)];
    for (std::int64_t pos = 0; pos < total; ++pos) {
      const auto coord = (pos / s) % e;
      if (coord > 0) prefix_[static_cast<std::size_t>(pos)] += prefix_[static_cast<std::size_t>(pos - s)];
    }
  }
}

std::int64_t Region::count(const IndexRange& range) const {
  if (range.empty()) return 0;
  const auto d = pext_.size();
  std::int64_t total = 0;
  for (std::uint32_t corner = 0; corner < (1u << d); ++corner) {
    std::int64_t pos = 0;
    int sign = 1;
    for (std::size_t i = 0; i < d; ++i) {
      if (corner & (1u << i)) {
        pos += range.lo[i] * pstride_[i];
        sign = -sign;
      } else {
        pos += range.hi[i] * pstride_[i];
      }
    }
    total += sign * prefix_[static_cast<std::size_t>(pos)];
  }
  return total;
}

bool Region::contains(const Box& box) const {
  if (cells_.empty()) return false;
  const IndexRange r = level_->cells_overlapping(box);
  if (r.empty()) return false;
  return count(r) == r.count();
}

bool Region::contains_point(std::span<const double> x) const {
  IndexRange r;
  for (int i = 0; i < level_->dim(); ++i) {
    const auto& kv = level_->direction(i);
    const double xi = x[static_cast<std::size_t>(i)];
    if (xi < 0.0 || xi > 1.0) return false;
    const int k = kv.find_interval(xi);
    r.lo.push_back(k > 0 && kv.interval(k).lo == xi ? k - 1 : k);
    r.hi.push_back(k + 1);
  }
  return count(r) > 0;
}

}  // namespace hbs
