#include "hbs/tensor/level_sequence.hpp"

#include "hbs/common/errors.hpp"

namespace hbs {

namespace {

struct Factor {
  int index;
  double coefficient;
  const Rational* exact;
};

/// Cartesian product of per-direction factor lists, direction 0 fastest.
std::vector<TensorTerm> product(const std::vector<std::vector<Factor>>& lists, const TensorLevel& target,
                                bool exact = true) {
  std::vector<TensorTerm> out;
  const std::size_t d = lists.size();
  std::size_t total = 1;
  for (const auto& l : lists) total *= l.size();
  if (total == 0) return out;
  out.reserve(total);
  std::vector<std::size_t> pos(d, 0);
  MultiIndex m(d);
  while (true) {
    TensorTerm t;
    t.id.level = target.level();
    t.coefficient = 1.0;
    if (exact) t.exact = 1;
    for (std::size_t i = 0; i < d; ++i) {
      const Factor& f = lists[i][pos[i]];
      m[i] = f.index;
      t.coefficient *= f.coefficient;
      if (exact) t.exact *= *f.exact;
    }
    t.id.index = target.function_index(m);
    out.push_back(std::move(t));
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++pos[i] < lists[i].size()) break;
      pos[i] = 0;
    }
    if (i == d) break;
  }
  return out;
}

void check_nested(const TensorLevel& coarse, const TensorLevel& fine) {
  if (coarse.dim() != fine.dim())
    throw NestingViolation(fine.level(), 0, "dimension changes between levels");
  for (int i = 0; i < coarse.dim(); ++i) {
    if (coarse.degree(i) != fine.degree(i))
      throw NestingViolation(fine.level(), i, "degree changes between levels");
    if (!coarse.direction(i).is_refined_by(fine.direction(i)))
      throw NestingViolation(fine.level(), i,
                             "knot vector does not contain every knot of level " + std::to_string(coarse.level()) +
                                 " with at least the same multiplicity");
  }
}

}  // namespace

LevelSequence::LevelSequence(std::vector<TensorLevel> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw ValidationError("level sequence", "depth must be at least 1");
  for (std::size_t l = 0; l < levels_.size(); ++l)
    if (levels_[l].level() != static_cast<int>(l))
      throw ValidationError("level sequence", "levels must be numbered 0, 1, ...");
  for (std::size_t l = 0; l + 1 < levels_.size(); ++l) {
    check_nested(levels_[l], levels_[l + 1]);
    std::vector<TwoScaleMatrix> row;
    for (int i = 0; i < levels_[l].dim(); ++i)
      row.emplace_back(levels_[l].direction(i), levels_[l + 1].direction(i));
    two_scale_.push_back(std::move(row));
  }
}

bool LevelSequence::dyadic() const {
  for (std::size_t l = 0; l + 1 < levels_.size(); ++l)
    for (int i = 0; i < dim(); ++i)
      if (!(dyadic_refine(levels_[l].direction(i)) == levels_[l + 1].direction(i))) return false;
  return true;
}

template <class Select>
std::vector<TensorTerm> LevelSequence::combine(FunctionId id, int target_level, bool exact, Select&& select) const {
  const TensorLevel& own = level(id.level);
  const MultiIndex m = own.function_multi(id.index);
  std::vector<std::vector<Factor>> lists(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i)
    for (const auto& e : select(i, m[static_cast<std::size_t>(i)]))
      lists[static_cast<std::size_t>(i)].push_back({e.index, e.coefficient, &e.exact});
  return product(lists, level(target_level), exact);
}

std::vector<TensorTerm> LevelSequence::children(FunctionId parent, bool exact) const {
  if (parent.level < 0 || parent.level + 1 >= depth())
    throw Error("level " + std::to_string(parent.level) + " has no finer level in a sequence of depth " +
                std::to_string(depth()));
  return combine(parent, parent.level + 1, exact, [&](int i, int j) { return two_scale(parent.level, i).children(j); });
}

std::vector<TensorTerm> LevelSequence::parents(FunctionId child, bool exact) const {
  if (child.level < 1 || child.level >= depth())
    throw Error("level " + std::to_string(child.level) + " has no coarser level");
  return combine(child, child.level - 1, exact, [&](int i, int j) { return two_scale(child.level - 1, i).parents(j); });
}

LevelSequence LevelSequence::extended(int new_depth) const {
  std::vector<TensorLevel> levels = levels_;
  while (static_cast<int>(levels.size()) < new_depth) {
    std::vector<KnotVector> next;
    for (const auto& kv : levels.back().directions()) next.push_back(dyadic_refine(kv));
    levels.emplace_back(static_cast<int>(levels.size()), std::move(next));
  }
  return LevelSequence(std::move(levels));
}

LevelSequence build_level_sequence(const std::vector<KnotVector>& initial, int depth, const RefinementRule& rule) {
  if (depth < 1) throw ValidationError("level sequence", "depth must be at least 1");
  std::vector<TensorLevel> levels;
  levels.emplace_back(0, initial);
  for (int l = 1; l < depth; ++l) {
    std::vector<KnotVector> next;
    if (rule.kind == RefinementRule::Kind::Dyadic) {
      for (const auto& kv : levels.back().directions()) next.push_back(dyadic_refine(kv));
    } else {
      if (static_cast<int>(rule.explicit_levels.size()) < l)
        throw ValidationError("level sequence", "explicit refinement lists " +
                                                    std::to_string(rule.explicit_levels.size()) +
                                                    " levels but depth " + std::to_string(depth) + " needs " +
                                                    std::to_string(depth - 1));
      next = rule.explicit_levels[static_cast<std::size_t>(l - 1)];
      if (next.size() != initial.size())
        throw NestingViolation(l, static_cast<int>(next.size()), "wrong number of directions");
    }
    levels.emplace_back(l, std::move(next));
  }
  return LevelSequence(std::move(levels));
}

std::vector<TensorTerm> tensor_children(const TensorLevel& coarse, FunctionId parent, const TensorLevel& fine) {
  if (parent.level != coarse.level() || fine.level() != coarse.level() + 1)
    throw Error("tensor_children: parent of level " + std::to_string(parent.level) + " against levels " +
                std::to_string(coarse.level()) + " and " + std::to_string(fine.level()));
  if (coarse.dim() != fine.dim()) throw RefinementMismatch("levels differ in dimension");
  const MultiIndex m = coarse.function_multi(parent.index);
  std::vector<std::vector<ChildTerm>> terms;
  std::vector<std::vector<Factor>> lists;
  for (int i = 0; i < coarse.dim(); ++i)
    terms.push_back(children_with_coefficients(coarse.direction(i).local(m[static_cast<std::size_t>(i)]),
                                               fine.direction(i)));
  for (const auto& t : terms) {
    std::vector<Factor> l;
    for (const auto& c : t) l.push_back({c.index, c.coefficient, &c.exact});
    lists.push_back(std::move(l));
  }
  return product(lists, fine);
}

}  // namespace hbs
