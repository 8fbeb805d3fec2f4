#include "hbs/tensor/tensor_level.hpp"

#include <algorithm>
#include <sstream>

#include "hbs/common/errors.hpp"

namespace hbs {

double Box::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

bool Box::contains(const Box& other) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (other.lo[i] < lo[i] || other.hi[i] > hi[i]) return false;
  return true;
}

bool Box::contains_point(std::span<const double> x) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

std::string Box::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < lo.size(); ++i) os << (i ? " x " : "") << '[' << lo[i] << ", " << hi[i] << ']';
  return os.str();
}

TensorLevel::TensorLevel(int level, std::vector<KnotVector> directions) : level_(level), dirs_(std::move(directions)) {
  if (dirs_.empty() || static_cast<int>(dirs_.size()) > kMaxDimension)
    throw ValidationError("tensor level", "dimension must be between 1 and " + std::to_string(kMaxDimension));
  for (const auto& kv : dirs_) {
    fext_.push_back(kv.size());
    cext_.push_back(kv.num_intervals());
  }
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    fstride_.push_back(nfun_);
    cstride_.push_back(ncell_);
    nfun_ *= fext_[i];
    ncell_ *= cext_[i];
  }
}

MultiIndex TensorLevel::function_multi(std::int64_t f) const {
  MultiIndex m(dirs_.size());
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    m[i] = static_cast<int>(f % fext_[i]);
    f /= fext_[i];
  }
  return m;
}

std::int64_t TensorLevel::function_index(const MultiIndex& m) const {
  std::int64_t f = 0;
  for (std::size_t i = 0; i < dirs_.size(); ++i) f += m[i] * fstride_[i];
  return f;
}

MultiIndex TensorLevel::cell_multi(std::int64_t c) const {
  MultiIndex m(dirs_.size());
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    m[i] = static_cast<int>(c % cext_[i]);
    c /= cext_[i];
  }
  return m;
}

std::int64_t TensorLevel::cell_index(const MultiIndex& m) const {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < dirs_.size(); ++i) c += m[i] * cstride_[i];
  return c;
}

Box TensorLevel::support(std::int64_t f) const {
  const MultiIndex m = function_multi(f);
  Box b;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const auto [a, e] = dirs_[i].support(m[i]);
    b.lo.push_back(a);
    b.hi.push_back(e);
  }
  return b;
}

Box TensorLevel::cell_box(std::int64_t c) const {
  const MultiIndex m = cell_multi(c);
  Box b;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const auto& cell = dirs_[i].interval(m[i]);
    b.lo.push_back(cell.lo);
    b.hi.push_back(cell.hi);
  }
  return b;
}

Box TensorLevel::support_extension(std::int64_t c) const {
  const MultiIndex m = cell_multi(c);
  Box b;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const auto [a, e] = dirs_[i].support_extension(m[i]);
    b.lo.push_back(a);
    b.hi.push_back(e);
  }
  return b;
}

double TensorLevel::eval(std::int64_t f, std::span<const double> x) const {
  const MultiIndex m = function_multi(f);
  double v = 1.0;
  for (std::size_t i = 0; i < dirs_.size() && v != 0.0; ++i) v *= dirs_[i].eval(m[i], x[i]);
  return v;
}

std::int64_t TensorLevel::locate_cell(std::span<const double> x) const {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < dirs_.size(); ++i) c += dirs_[i].find_interval(x[i]) * cstride_[i];
  return c;
}

IndexRange TensorLevel::cells_overlapping(const Box& box) const {
  IndexRange r;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const auto [a, b] = dirs_[i].intervals_overlapping(box.lo[i], box.hi[i]);
    r.lo.push_back(a);
    r.hi.push_back(b);
  }
  return r;
}

IndexRange TensorLevel::functions_on_cell(std::int64_t c) const {
  const MultiIndex m = cell_multi(c);
  IndexRange r;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const int first = dirs_[i].first_function_on(m[i]);
    r.lo.push_back(first);
    r.hi.push_back(first + dirs_[i].degree() + 1);
  }
  return r;
}

IndexRange TensorLevel::cells_in_support(std::int64_t f) const { return cells_overlapping(support(f)); }

IndexRange TensorLevel::functions_overlapping(const Box& box) const {
  IndexRange r;
  for (std::size_t i = 0; i < dirs_.size(); ++i) {
    const auto [a, b] = dirs_[i].intervals_overlapping(box.lo[i], box.hi[i]);
    if (a >= b) {
      r.lo.push_back(0);
      r.hi.push_back(0);
      continue;
    }
    r.lo.push_back(dirs_[i].first_function_on(a));
    r.hi.push_back(dirs_[i].first_function_on(b - 1) + dirs_[i].degree() + 1);
  }
  return r;
}

}  // namespace hbs
