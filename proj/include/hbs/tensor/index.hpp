#pragma once

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace hbs {

using MultiIndex = boost::container::small_vector<int, 4>;

/// A basis function of a level, by linear index.
struct FunctionId {
  int level = 0;
  std::int64_t index = 0;

  auto operator<=>(const FunctionId&) const = default;
};

/// A mesh cell of a level, by linear index.
struct CellId {
  int level = 0;
  std::int64_t index = 0;

  auto operator<=>(const CellId&) const = default;
};

/// Half-open product of index ranges [lo_i, hi_i).
struct IndexRange {
  MultiIndex lo;
  MultiIndex hi;

  bool empty() const {
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (lo[i] >= hi[i]) return true;
    return false;
  }
  std::int64_t count() const {
    std::int64_t n = 1;
    for (std::size_t i = 0; i < lo.size(); ++i) n *= lo[i] < hi[i] ? hi[i] - lo[i] : 0;
    return n;
  }
};

/// Row-major strides with direction 0 fastest.
inline std::vector<std::int64_t> strides_for(std::span<const int> extents) {
  std::vector<std::int64_t> s(extents.size());
  std::int64_t acc = 1;
  for (std::size_t i = 0; i < extents.size(); ++i) {
    s[i] = acc;
    acc *= extents[i];
  }
  return s;
}

/// Calls fn(linear, multi) for every multi-index in `range`, direction 0
/// fastest, with linear = sum multi[i] * strides[i].
template <class Fn>
void for_each_index(const IndexRange& range, std::span<const std::int64_t> strides, Fn&& fn) {
  if (range.empty()) return;
  const std::size_t d = range.lo.size();
  MultiIndex m(range.lo);
  std::int64_t linear = 0;
  for (std::size_t i = 0; i < d; ++i) linear += m[i] * strides[i];
  while (true) {
    fn(linear, static_cast<const MultiIndex&>(m));
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++m[i] < range.hi[i]) {
        linear += strides[i];
        break;
      }
      linear -= (m[i] - 1 - range.lo[i]) * strides[i];
      m[i] = range.lo[i];
    }
    if (i == d) return;
  }
}

}  // namespace hbs
