#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <map>

#include "hbs/common/errors.hpp"
#include "hbs/tensor/cell_set.hpp"
#include "hbs/tensor/level_sequence.hpp"
#include "test_support.hpp"

using namespace hbs;
using hbs::testing::Rng;

namespace {

std::vector<double> random_point(Rng& rng, int d) {
  std::vector<double> x(static_cast<std::size_t>(d));
  for (auto& v : x) v = hbs::testing::uniform01(rng);
  return x;
}

LevelSequence random_sequence(Rng& rng, int d, int depth) {
  std::vector<KnotVector> initial;
  for (int i = 0; i < d; ++i)
    initial.push_back(hbs::testing::random_knot_vector(rng, hbs::testing::uniform_int(rng, 1, 3), 3));
  return build_level_sequence(initial, depth);
}

}  // namespace

TEST_CASE("build_level_sequence") {
  const std::vector<KnotVector> init(2, KnotVector::uniform(2, 4));
  const LevelSequence seq = build_level_sequence(init, 3);
  REQUIRE(seq.depth() == 3);
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 2; ++i) CHECK(seq.level(l).direction(i).num_intervals() == (4 << l));
  CHECK(seq.dyadic());
  CHECK(build_level_sequence(init, 1).depth() == 1);

  RefinementRule rule;
  rule.kind = RefinementRule::Kind::Explicit;
  // Level 1 drops the knot 0.25 in direction 1.
  rule.explicit_levels = {{KnotVector::uniform(2, 8), KnotVector(2, {0, 0, 0, 0.5, 0.75, 1, 1, 1})}};
  try {
    (void)build_level_sequence(init, 2, rule);
    FAIL("expected a nesting violation");
  } catch (const NestingViolation& e) {
    CHECK(e.level() == 1);
    CHECK(e.direction() == 1);
    CHECK(e.kind() == "level nesting");
  }
  rule.explicit_levels = {{KnotVector::uniform(2, 8), KnotVector(2, {0, 0, 0, 0.25, 0.5, 0.5, 0.75, 1, 1, 1})}};
  const LevelSequence ok = build_level_sequence(init, 2, rule);
  CHECK_FALSE(ok.dyadic());
  CHECK(ok.extended(4).depth() == 4);
  CHECK(ok.extended(4).level(3).direction(0).num_intervals() == 32);
}

TEST_CASE("index bookkeeping") {
  Rng rng(5);
  const LevelSequence seq = random_sequence(rng, 3, 1);
  const TensorLevel& lv = seq.level(0);
  for (std::int64_t f = 0; f < lv.num_functions(); ++f) CHECK(lv.function_index(lv.function_multi(f)) == f);
  for (std::int64_t c = 0; c < lv.num_cells(); ++c) CHECK(lv.cell_index(lv.cell_multi(c)) == c);
  // Direction 0 fastest.
  const MultiIndex m = lv.function_multi(1);
  CHECK(m[0] == 1);
  CHECK(m[1] == 0);
}

TEST_CASE("support extension examples") {
  const TensorLevel d1(0, {KnotVector::uniform(2, 8)});
  const Box e = d1.support_extension(4);
  CHECK(d1.cells_overlapping(e).count() == 5);
  CHECK(e.lo[0] == 0.25);
  CHECK(e.hi[0] == 0.875);
  const Box b = d1.support_extension(0);
  CHECK(b.lo[0] == 0.0);
  CHECK(b.hi[0] == 0.375);

  const TensorLevel d2(0, {KnotVector::uniform(2, 8), KnotVector::uniform(1, 4)});
  const MultiIndex cm{4, 0};
  const Box p = d2.support_extension(d2.cell_index(cm));
  CHECK(p.lo == std::vector<double>{0.25, 0.0});
  CHECK(p.hi == std::vector<double>{0.875, 0.5});
  // The extension is the union of supports of the functions on the cell.
  Rng rng(9);
  const LevelSequence seq = random_sequence(rng, 2, 1);
  const TensorLevel& lv = seq.level(0);
  for (std::int64_t c = 0; c < lv.num_cells(); ++c) {
    Box u{{1, 1}, {0, 0}};
    for_each_index(lv.functions_on_cell(c), lv.function_strides(), [&](std::int64_t f, const MultiIndex&) {
      const Box s = lv.support(f);
      for (int i = 0; i < 2; ++i) {
        u.lo[static_cast<std::size_t>(i)] = std::min(u.lo[static_cast<std::size_t>(i)], s.lo[static_cast<std::size_t>(i)]);
        u.hi[static_cast<std::size_t>(i)] = std::max(u.hi[static_cast<std::size_t>(i)], s.hi[static_cast<std::size_t>(i)]);
      }
      CHECK(s.contains(lv.cell_box(c)));
    });
    CHECK(u == lv.support_extension(c));
  }
}

TEST_CASE("partition of unity and nonzero enumeration") {
  Rng rng(17);
  for (int d = 1; d <= 3; ++d) {
    const LevelSequence seq = random_sequence(rng, d, 2);
    for (int l = 0; l < 2; ++l) {
      const TensorLevel& lv = seq.level(l);
      for (int s = 0; s < 1000; ++s) {
        const auto x = random_point(rng, d);
        double sum = 0;
        std::map<std::int64_t, double> nz;
        lv.for_each_nonzero(x, [&](std::int64_t f, double v) {
          sum += v;
          nz[f] = v;
        });
        CHECK(std::abs(sum - 1.0) < 1e-12);
        if (s < 20)
          for (std::int64_t f = 0; f < lv.num_functions(); ++f) {
            const double v = lv.eval(f, x);
            const double w = nz.count(f) ? nz[f] : 0.0;
            CHECK(std::abs(v - w) < 1e-13);
          }
      }
    }
  }
}

TEST_CASE("local linear independence on every cell") {
  Rng rng(23);
  for (int d = 1; d <= 3; ++d) {
    const LevelSequence seq = random_sequence(rng, d, 1);
    const TensorLevel& lv = seq.level(0);
    for (std::int64_t c = 0; c < lv.num_cells(); ++c) {
      const Box box = lv.cell_box(c);
      const IndexRange fr = lv.functions_on_cell(c);
      std::vector<std::int64_t> funcs;
      for_each_index(fr, lv.function_strides(), [&](std::int64_t f, const MultiIndex&) { funcs.push_back(f); });
      // Tensor grid of p_i + 1 distinct interior points per direction.
      IndexRange pr;
      for (int i = 0; i < d; ++i) {
        pr.lo.push_back(0);
        pr.hi.push_back(lv.degree(i) + 1);
      }
      std::vector<int> ext(pr.hi.begin(), pr.hi.end());
      const auto st = strides_for(ext);
      const auto n = static_cast<Eigen::Index>(funcs.size());
      Eigen::MatrixXd a(n, n);
      for_each_index(pr, st, [&](std::int64_t row, const MultiIndex& m) {
        std::vector<double> x(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
          const auto u = static_cast<std::size_t>(i);
          x[u] = box.lo[u] + (box.hi[u] - box.lo[u]) * (m[u] + 1.0) / (lv.degree(i) + 2.0);
        }
        for (Eigen::Index col = 0; col < n; ++col)
          a(static_cast<Eigen::Index>(row), col) = lv.eval(funcs[static_cast<std::size_t>(col)], x);
      });
      CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(a).rank() == n);
    }
  }
}

TEST_CASE("tensor_children frozen example") {
  const std::vector<KnotVector> init(2, KnotVector::uniform(2, 8));
  const LevelSequence seq = build_level_sequence(init, 2);
  const MultiIndex pm{3, 4};
  const FunctionId parent{0, seq.level(0).function_index(pm)};
  const auto kids = tensor_children(seq.level(0), parent, seq.level(1));
  REQUIRE(kids.size() == 16);
  const Rational mask[] = {Rational(1, 4), Rational(3, 4), Rational(3, 4), Rational(1, 4)};
  const MultiIndex first = seq.level(1).function_multi(kids.front().id.index);
  for (const auto& k : kids) {
    const MultiIndex m = seq.level(1).function_multi(k.id.index);
    CHECK(k.exact == mask[m[0] - first[0]] * mask[m[1] - first[1]]);
    CHECK(k.coefficient == to_double(k.exact));
  }
  const auto cached = seq.children(parent);
  REQUIRE(cached.size() == kids.size());
  for (std::size_t i = 0; i < kids.size(); ++i) {
    CHECK(cached[i].id == kids[i].id);
    CHECK(cached[i].exact == kids[i].exact);
  }
  CHECK_THROWS_AS((void)tensor_children(seq.level(0), FunctionId{1, 0}, seq.level(1)), Error);
}

TEST_CASE("d = 1 reduces to the univariate relation") {
  const KnotVector kv(3, {0, 0, 0, 0, 0.25, 0.5, 0.5, 1, 1, 1, 1});
  const LevelSequence seq = build_level_sequence({kv}, 2);
  for (int j = 0; j < kv.size(); ++j) {
    const auto t = tensor_children(seq.level(0), {0, j}, seq.level(1));
    const auto u = children_with_coefficients(kv.local(j), seq.level(1).direction(0));
    REQUIRE(t.size() == u.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t[i].id.index == u[i].index);
      CHECK(t[i].exact == u[i].exact);
    }
  }
}

TEST_CASE("two-scale identity, supports and child counts") {
  Rng rng(31);
  for (int d = 1; d <= 3; ++d) {
    const LevelSequence seq = random_sequence(rng, d, 2);
    const TensorLevel& coarse = seq.level(0);
    const TensorLevel& fine = seq.level(1);
    for (int trial = 0; trial < 50; ++trial) {
      const std::int64_t pf = hbs::testing::uniform_int(rng, 0, static_cast<int>(coarse.num_functions() - 1));
      const auto kids = seq.children({0, pf});
      const Box ps = coarse.support(pf);
      for (const auto& k : kids) {
        CHECK(k.exact > 0);
        CHECK(ps.contains(fine.support(k.id.index)));
      }
      double worst = 0;
      for (int s = 0; s < 100; ++s) {
        const auto x = random_point(rng, d);
        double sum = 0;
        for (const auto& k : kids) sum += k.coefficient * fine.eval(k.id.index, x);
        worst = std::max(worst, std::abs(sum - coarse.eval(pf, x)));
      }
      CHECK(worst < 1e-12);
      // Parents are the transpose of children.
      for (const auto& k : kids) {
        bool found = false;
        for (const auto& p : seq.parents(k.id))
          if (p.id.index == pf) found = (p.exact == k.exact);
        CHECK(found);
      }
    }
  }
  // Interior parent of a uniform dyadic refinement: prod(p_i + 2) children.
  const LevelSequence seq = build_level_sequence({KnotVector::uniform(1, 8), KnotVector::uniform(2, 8), KnotVector::uniform(3, 8)}, 2);
  const MultiIndex mid{4, 4, 4};
  CHECK(seq.children({0, seq.level(0).function_index(mid)}).size() == 3u * 4u * 5u);
}

TEST_CASE("region containment agrees with brute force") {
  Rng rng(41);
  for (int d = 1; d <= 3; ++d) {
    const LevelSequence seq = random_sequence(rng, d, 2);
    const TensorLevel& lv = seq.level(0);
    const TensorLevel& fine = seq.level(1);
    for (int trial = 0; trial < 10; ++trial) {
      CellSet cells(lv);
      const double density = hbs::testing::uniform01(rng);
      for (std::int64_t c = 0; c < lv.num_cells(); ++c)
        if (hbs::testing::uniform01(rng) < density) cells.insert(c);
      const Region region(lv, cells);
      for (std::int64_t f = 0; f < fine.num_functions(); ++f) {
        const Box s = fine.support(f);
        bool brute = true;
        for (std::int64_t c = 0; c < lv.num_cells(); ++c) {
          const Box cb = lv.cell_box(c);
          bool overlaps = true;
          for (int i = 0; i < d; ++i) {
            const auto u = static_cast<std::size_t>(i);
            overlaps = overlaps && std::max(cb.lo[u], s.lo[u]) < std::min(cb.hi[u], s.hi[u]);
          }
          if (overlaps && !cells.contains(c)) brute = false;
        }
        CHECK(region.contains(s) == brute);
      }
      for (std::int64_t c = 0; c < lv.num_cells(); ++c) {
        const Box cb = lv.cell_box(c);
        CHECK(region.contains_point(cb.lo) == [&] {
          for (std::int64_t o = 0; o < lv.num_cells(); ++o)
            if (cells.contains(o) && lv.cell_box(o).contains_point(cb.lo)) return true;
          return false;
        }());
      }
    }
  }
  const TensorLevel lv(0, {KnotVector::uniform(1, 4)});
  const Region none(lv, CellSet(lv));
  CHECK_FALSE(none.contains(lv.cell_box(0)));
  const Region all(lv, CellSet::full(lv));
  CHECK(all.contains(Box{{0}, {1}}));
}
