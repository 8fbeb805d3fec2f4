#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hbs/tensor/index.hpp"
#include "hbs/univariate/knot_vector.hpp"

namespace hbs {

/// Closed axis-aligned box [lo_0, hi_0] x ... x [lo_{d-1}, hi_{d-1}].
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  int dim() const { return static_cast<int>(lo.size()); }
  double volume() const;
  bool contains(const Box& other) const;
  bool contains_point(std::span<const double> x) const;
  std::string str() const;

  bool operator==(const Box&) const = default;
};

/// Largest spatial dimension supported by the point evaluation buffers.
inline constexpr int kMaxDimension = 8;

/// One level of a tensor-product spline space: a knot vector per direction,
/// the cell mesh and the B-spline index space. Functions and cells are
/// addressed by linear index with direction 0 fastest.
class TensorLevel {
 public:
  TensorLevel(int level, std::vector<KnotVector> directions);

  int level() const { return level_; }
  int dim() const { return static_cast<int>(dirs_.size()); }
  const KnotVector& direction(int i) const { return dirs_[static_cast<std::size_t>(i)]; }
  std::span<const KnotVector> directions() const { return dirs_; }
  int degree(int i) const { return direction(i).degree(); }

  std::span<const int> function_extents() const { return fext_; }
  std::span<const int> cell_extents() const { return cext_; }
  std::span<const std::int64_t> function_strides() const { return fstride_; }
  std::span<const std::int64_t> cell_strides() const { return cstride_; }
  std::int64_t num_functions() const { return nfun_; }
  std::int64_t num_cells() const { return ncell_; }

  MultiIndex function_multi(std::int64_t f) const;
  std::int64_t function_index(const MultiIndex& m) const;
  MultiIndex cell_multi(std::int64_t c) const;
  std::int64_t cell_index(const MultiIndex& m) const;

  Box support(std::int64_t f) const;
  Box cell_box(std::int64_t c) const;
  /// Union of the supports of all functions acting on cell c.
  Box support_extension(std::int64_t c) const;

  double eval(std::int64_t f, std::span<const double> x) const;

  /// Cell containing x (right-continuous, closed at the upper boundary).
  std::int64_t locate_cell(std::span<const double> x) const;
  /// Cells whose interiors meet the interior of `box`.
  IndexRange cells_overlapping(const Box& box) const;
  /// Functions whose support contains cell c (exactly those nonzero on it).
  IndexRange functions_on_cell(std::int64_t c) const;
  /// Cells covered by the support of function f.
  IndexRange cells_in_support(std::int64_t f) const;
  /// Functions whose support meets the interior of `box`.
  IndexRange functions_overlapping(const Box& box) const;

  /// Calls fn(index, value) for the prod(p_i + 1) functions that may be
  /// nonzero at x.
  template <class Fn>
  void for_each_nonzero(std::span<const double> x, Fn&& fn) const;

  double max_cell_size(int direction) const { return dirs_[static_cast<std::size_t>(direction)].max_interval_length(); }

  bool operator==(const TensorLevel& other) const { return dirs_ == other.dirs_; }

 private:
  int level_;
  std::vector<KnotVector> dirs_;
  std::vector<int> fext_, cext_;
  std::vector<std::int64_t> fstride_, cstride_;
  std::int64_t nfun_ = 1, ncell_ = 1;
};

template <class Fn>
void TensorLevel::for_each_nonzero(std::span<const double> x, Fn&& fn) const {
  const int d = dim();
  std::array<std::array<double, 32>, kMaxDimension> vals;
  std::array<int, kMaxDimension> first{};
  std::array<int, kMaxDimension> count{};
  for (int i = 0; i < d; ++i) {
    const auto& kv = dirs_[static_cast<std::size_t>(i)];
    count[static_cast<std::size_t>(i)] = kv.degree() + 1;
    first[static_cast<std::size_t>(i)] = kv.eval_nonzero(x[static_cast<std::size_t>(i)], vals[static_cast<std::size_t>(i)]);
  }
  std::array<int, kMaxDimension> m{};
  while (true) {
    double v = 1.0;
    std::int64_t linear = 0;
    for (int i = 0; i < d; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      v *= vals[ui][static_cast<std::size_t>(m[ui])];
      linear += (first[ui] + m[ui]) * fstride_[ui];
    }
    fn(linear, v);
    int i = 0;
    for (; i < d; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (++m[ui] < count[ui]) break;
      m[ui] = 0;
    }
    if (i == d) return;
  }
}

}  // namespace hbs
