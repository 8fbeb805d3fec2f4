#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "hbs/common/errors.hpp"
#include "hbs/quasiinterp/norms.hpp"
#include "hbs/quasiinterp/operators.hpp"

using namespace hbs;
using namespace hbs::testing;

namespace {

std::shared_ptr<const LevelSequence> uniform_levels(int d, int p, int intervals, int depth) {
  return std::make_shared<const LevelSequence>(
      build_level_sequence(std::vector<KnotVector>(static_cast<std::size_t>(d), KnotVector::uniform(p, intervals)), depth));
}

/// Cells of `lv` inside the coordinate box [lo, hi].
CellSet cells_in(const TensorLevel& lv, std::vector<double> lo, std::vector<double> hi) {
  CellSet s(lv);
  s.insert(lv.cells_overlapping(Box{std::move(lo), std::move(hi)}));
  return s;
}

/// Corner refinement [0, a_l]^d with one extent per subdomain.
std::shared_ptr<const SubdomainHierarchy> corner(int d, int p, int intervals, const std::vector<double>& extents) {
  auto levels = uniform_levels(d, p, intervals, static_cast<int>(extents.size()) + 1);
  std::vector<CellSet> subs;
  for (std::size_t k = 0; k < extents.size(); ++k)
    subs.push_back(cells_in(levels->level(static_cast<int>(k)), std::vector<double>(static_cast<std::size_t>(d), 0.0),
                            std::vector<double>(static_cast<std::size_t>(d), extents[k])));
  return std::make_shared<const SubdomainHierarchy>(levels, std::move(subs));
}

std::vector<double> point_in_cell(Rng& rng, const TensorLevel& lv, std::int64_t c) {
  const Box b = lv.cell_box(c);
  std::vector<double> x;
  for (std::size_t i = 0; i < b.lo.size(); ++i) x.push_back(b.lo[i] + (b.hi[i] - b.lo[i]) * uniform01(rng));
  return x;
}

std::vector<double> point_in(Rng& rng, const TensorLevel& lv, const CellSet& cells) {
  const auto m = cells.members();
  return point_in_cell(rng, lv, m[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(m.size()) - 1))]);
}

ScalarFunction level_spline(const TensorLevel& lv, std::vector<double> c) {
  return [&lv, c = std::move(c)](std::span<const double> x) {
    double v = 0.0;
    lv.for_each_nonzero(x, [&](std::int64_t f, double b) { v += c[static_cast<std::size_t>(f)] * b; });
    return v;
  };
}

ScalarFunction smooth_function(Rng& rng) {
  std::vector<double> a, b;
  for (int i = 0; i < kMaxDimension; ++i) {
    a.push_back(1.0 + 4.0 * uniform01(rng));
    b.push_back(uniform01(rng));
  }
  return [a, b](std::span<const double> x) {
    double v = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) v *= std::sin(a[i] * x[i] + b[i]);
    return v + 0.5;
  };
}

/// Random hierarchies whose omega domains are nested.
std::vector<std::shared_ptr<const SubdomainHierarchy>> nested_hierarchies(Rng& rng, int count, int max_d = 2) {
  std::vector<std::shared_ptr<const SubdomainHierarchy>> out;
  for (int trial = 0; static_cast<int>(out.size()) < count && trial < 50 * count; ++trial) {
    auto h = random_hierarchy(rng, 1 + trial % max_d, 2 + trial % 3);
    if (compute_omega_domains(*h).nested) out.push_back(h);
  }
  REQUIRE(static_cast<int>(out.size()) == count);
  return out;
}

}  // namespace

TEST_CASE("Gauss-Legendre rules") {
  for (int n = 1; n <= 40; ++n) {
    const GaussRule& g = gauss_legendre(n);
    REQUIRE(g.nodes.size() == static_cast<std::size_t>(n));
    // Exact for x^k, k <= 2n - 1: the integral over [-1, 1] is 2/(k+1) for even k.
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += g.weights[static_cast<std::size_t>(j)] * std::pow(g.nodes[static_cast<std::size_t>(j)], k);
      CHECK(std::abs(s - (k % 2 == 0 ? 2.0 / (k + 1) : 0.0)) < 1e-13);
    }
    for (int j = 1; j < n; ++j) CHECK(g.nodes[static_cast<std::size_t>(j - 1)] < g.nodes[static_cast<std::size_t>(j)]);
  }
  CHECK_THROWS_AS((void)gauss_legendre(0), Error);
}

TEST_CASE("local projection: mass matrix and polynomial reproduction") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 3;
    auto levels = random_levels(rng, d, 1);
    const TensorLevel& lv = levels->level(0);
    const std::int64_t c = uniform_int(rng, 0, static_cast<int>(lv.num_cells()) - 1);
    const LocalProjection proj(lv, c);
    const auto& fs = proj.functions();
    std::int64_t n = 1;
    for (int i = 0; i < d; ++i) n *= lv.degree(i) + 1;
    REQUIRE(static_cast<std::int64_t>(fs.size()) == n);
    const Eigen::MatrixXd& m = proj.mass();
    CHECK((m - m.transpose()).norm() < 1e-15);
    CHECK(m.llt().info() == Eigen::Success);
    // Oracle: direct tensor evaluation with a high-order rule.
    const Box b = lv.cell_box(c);
    std::vector<int> counts(static_cast<std::size_t>(d), 12);
    const TensorQuadrature rule = tensor_gauss(b.lo, b.hi, counts);
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k)
          s += rule.weights[k] * lv.eval(fs[i], rule.point(k)) * lv.eval(fs[j], rule.point(k));
        CHECK(std::abs(s - m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))) < 1e-14 * b.volume() + 1e-16);
      }
    // A random tensor polynomial of degree <= p is reproduced on the cell.
    std::vector<std::vector<double>> coef(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      for (int k = 0; k <= lv.degree(i); ++k) coef[static_cast<std::size_t>(i)].push_back(2.0 * uniform01(rng) - 1.0);
    const ScalarFunction poly = [&](std::span<const double> x) {
      double v = 1.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double t = 0.0;
        for (auto it = coef[i].rbegin(); it != coef[i].rend(); ++it) t = t * x[i] + *it;
        v *= t;
      }
      return v;
    };
    const Eigen::VectorXd lam = proj.coefficients(poly);
    for (int k = 0; k < 20; ++k) {
      const auto x = point_in_cell(rng, lv, c);
      double v = 0.0;
      for (std::size_t i = 0; i < fs.size(); ++i) v += lam(static_cast<Eigen::Index>(i)) * lv.eval(fs[i], x);
      CHECK(std::abs(v - poly(x)) < 1e-10);
    }
  }
}

TEST_CASE("omega domains") {
  Rng rng(5);
  SUBCASE("omega_0 is the whole domain and matches the function-wise definition") {
    for (int trial = 0; trial < 20; ++trial) {
      auto h = random_hierarchy(rng, 1 + trial % 3, 2 + trial % 3);
      const OmegaDomains w = compute_omega_domains(*h);
      CHECK(w.at(0).is_full());
      for (int l = 0; l < h->depth(); ++l) {
        const TensorLevel& lv = h->level(l);
        for (std::int64_t c = 0; c < lv.num_cells(); ++c) {
          bool all_in = true;
          for_each_index(lv.functions_on_cell(c), lv.function_strides(),
                         [&](std::int64_t f, const MultiIndex&) { all_in = all_in && h->support_in(l, {l, f}); });
          CHECK(w.at(l).contains(c) == all_in);
        }
      }
      // Strict admissibility implies nesting.
      const Admissibility a = check_admissibility(*h, w);
      if (a.strictly_admissible) CHECK(a.omega_nested);
    }
  }
  SUBCASE("a single refined cell leaves omega_1 empty") {
    auto levels = uniform_levels(2, 2, 8, 2);
    CellSet one(levels->level(0));
    one.insert(levels->level(0).cell_index(MultiIndex{3, 4}));
    const SubdomainHierarchy h(levels, {one});
    const OmegaDomains w = compute_omega_domains(h);
    CHECK(w.at(1).empty());
    CHECK(check_admissibility(h, w).strictly_admissible);
  }
  SUBCASE("global refinement is strictly admissible") {
    auto levels = uniform_levels(2, 3, 4, 3);
    const SubdomainHierarchy h(levels, {CellSet::full(levels->level(0)), CellSet::full(levels->level(1))});
    const Admissibility a = check_admissibility(h, compute_omega_domains(h));
    CHECK(a.strictly_admissible);
    CHECK(a.omega_nested);
  }
  SUBCASE("four-level corner and center meshes: nested but not strictly admissible") {
    std::vector<std::shared_ptr<const SubdomainHierarchy>> cases{
        corner(2, 2, 8, {0.5, 7.0 / 16, 3.0 / 8}),
        corner(2, 3, 8, {0.5, 3.0 / 8, 10.0 / 32}),
    };
    auto levels = uniform_levels(2, 2, 8, 4);
    cases.push_back(std::make_shared<const SubdomainHierarchy>(
        levels, std::vector<CellSet>{cells_in(levels->level(0), {0.25, 0.25}, {0.75, 0.75}),
                                     cells_in(levels->level(1), {5.0 / 16, 5.0 / 16}, {11.0 / 16, 11.0 / 16}),
                                     cells_in(levels->level(2), {3.0 / 8, 3.0 / 8}, {5.0 / 8, 5.0 / 8})}));
    for (const auto& h : cases) {
      const Admissibility a = check_admissibility(*h, compute_omega_domains(*h));
      CHECK_FALSE(a.strictly_admissible);
      CHECK(a.omega_nested);
    }
  }
  SUBCASE("a narrow strip breaks omega nesting") {
    auto h = corner(1, 1, 8, {0.25, 0.25});
    const OmegaDomains w = compute_omega_domains(*h);
    CHECK_FALSE(w.nested);
    const MultiscaleQuasiInterpolant pi(h);
    CHECK_THROWS_AS((void)pi.apply([](std::span<const double>) { return 1.0; }), AdmissibilityError);
  }
}

TEST_CASE("dual functionals: Kronecker property, local support, constants") {
  Rng rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    auto h = random_hierarchy(rng, 1 + trial % 2, 3, 2);
    const MultiscaleQuasiInterpolant pi(h);
    for (int l = 0; l < h->depth(); ++l) {
      const LevelQuasiInterpolant& op = pi.level(l);
      const TensorLevel& lv = op.tensor_level();
      CHECK(op.members() == omega_functions(lv, op.omega()));
      for (const std::int64_t b : op.members()) {
        const std::int64_t q = op.chosen_cell(b);
        CHECK(op.omega().contains(q));
        CHECK(lv.support(b).contains(lv.cell_box(q)));
        // No smaller cell of the support lies in omega_l.
        for_each_index(lv.cells_in_support(b), lv.cell_strides(), [&](std::int64_t c, const MultiIndex&) {
          if (c < q) CHECK_FALSE(op.omega().contains(c));
        });
      }
      // Row j of the duality matrix is P_l applied to beta_j.
      double worst = 0.0;
      for (const std::int64_t j : op.members()) {
        const std::vector<double> row = op.apply([&](std::span<const double> x) { return lv.eval(j, x); });
        for (const std::int64_t i : op.members())
          worst = std::max(worst, std::abs(row[static_cast<std::size_t>(i)] - (i == j ? 1.0 : 0.0)));
      }
      CHECK(worst < 1e-10);
      const std::vector<double> ones = op.apply([](std::span<const double>) { return 1.0; });
      for (const std::int64_t b : op.members()) CHECK(std::abs(ones[static_cast<std::size_t>(b)] - 1.0) < 1e-12);
      // f vanishing on Q_beta.
      for (const std::int64_t b : op.members()) {
        const Box q = lv.cell_box(op.chosen_cell(b));
        const ScalarFunction off = [&](std::span<const double> x) { return q.contains_point(x) ? 0.0 : 3.0; };
        CHECK(op.dual(b, off) == 0.0);
      }
    }
  }
}

TEST_CASE("level operators P_l") {
  Rng rng(11);
  for (int trial = 0; trial < 8; ++trial) {
    auto h = random_hierarchy(rng, 1 + trial % 2, 3);
    const MultiscaleQuasiInterpolant pi(h);
    for (int l = 0; l < h->depth(); ++l) {
      const LevelQuasiInterpolant& op = pi.level(l);
      const TensorLevel& lv = op.tensor_level();
      if (op.members().empty()) continue;
      // (i) reproduction of V_omega, everywhere.
      std::vector<double> c(static_cast<std::size_t>(lv.num_functions()), 0.0);
      for (const std::int64_t b : op.members()) c[static_cast<std::size_t>(b)] = 2.0 * uniform01(rng) - 1.0;
      const std::vector<double> pc = op.apply(level_spline(lv, c));
      for (std::size_t f = 0; f < c.size(); ++f) CHECK(std::abs(pc[f] - c[f]) < 1e-10);
      // (iii) any s in V_l is reproduced on omega_l.
      std::vector<double> full(static_cast<std::size_t>(lv.num_functions()));
      for (auto& v : full) v = 2.0 * uniform01(rng) - 1.0;
      const ScalarFunction s = level_spline(lv, full);
      const ScalarFunction ps = level_spline(lv, op.apply(s));
      for (int k = 0; k < 50; ++k) {
        const auto x = point_in(rng, lv, op.omega());
        CHECK(std::abs(ps(x) - s(x)) < 1e-10);
      }
      // (ii) f vanishing on omega_l.
      const Region w(lv, op.omega());
      const ScalarFunction outside = [&](std::span<const double> x) { return w.contains_point(x) ? 0.0 : 1.0 + x[0]; };
      for (double v : op.apply(outside)) CHECK(v == 0.0);
    }
  }
}

TEST_CASE("multiscale operator identities on omega-nested hierarchies") {
  Rng rng(13);
  for (const auto& h : nested_hierarchies(rng, 10)) {
    const MultiscaleQuasiInterpolant pi(h);
    const int d = h->dim();
    const TensorLevel& l0 = h->level(0);

    // V_0 reproduction, through the H~ representation.
    std::vector<double> c0(static_cast<std::size_t>(l0.num_functions()));
    for (auto& v : c0) v = 2.0 * uniform01(rng) - 1.0;
    const ScalarFunction s0 = level_spline(l0, c0);
    const HierSplineFunction ps0 = pi.apply(s0);
    CHECK(ps0.basis().flavor() == Flavor::Refinable);
    for (int k = 0; k < 200; ++k) {
      const auto x = random_point(rng, d);
      CHECK(std::abs(ps0.eval(x) - s0(x)) < 1e-10);
    }

    const ScalarFunction f = smooth_function(rng);
    const MultiLevelSpline raw = pi.recursion(f);
    const HierSplineFunction pf = pi.apply(f);
    // Range in Sum V_omega_l.
    for (int l = 0; l < pi.depth(); ++l)
      for (std::int64_t g = 0; g < h->level(l).num_functions(); ++g)
        if (!pi.level(l).is_member(g)) CHECK(raw[{l, g}] == 0.0);
    // The H~ representation equals the raw recursion.
    for (int k = 0; k < 200; ++k) {
      const auto x = random_point(rng, d);
      CHECK(std::abs(pf.eval(x) - raw.eval(x)) < 1e-10);
    }
    for (int l = 0; l < pi.depth(); ++l) {
      const CellSet& w = pi.omegas().at(l);
      if (w.empty()) continue;
      const TensorLevel& lv = h->level(l);
      const MultiLevelSpline dec = pi.decomposition(l, f);
      const ScalarFunction pl = level_spline(lv, pi.level(l).apply(f));
      for (int k = 0; k < 200; ++k) {
        const auto x = point_in(rng, lv, w);
        CHECK(std::abs(dec.eval(x) - raw.eval(x)) < 1e-10);
        // Pi_l f = P_l f on omega_l.
        double stage = 0.0;
        for (int j = 0; j <= l; ++j) stage += raw.eval_level(j, x);
        CHECK(std::abs(stage - pl(x)) < 1e-10);
      }
    }
  }
}

TEST_CASE("B_{l,omega_l} lies in H~_l and omega functions have parents inside Omega_{l+1}") {
  Rng rng(17);
  int nested = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto h = random_hierarchy(rng, 1 + trial % 3, 2 + trial % 3);
    const OmegaDomains w = compute_omega_domains(*h);
    CHECK(omega_parent_violations(*h, w).empty());
    if (!w.nested) continue;
    ++nested;
    const HierBasis tilde = build_refinable_basis(h);
    for (int l = 0; l < h->depth(); ++l)
      for (const std::int64_t f : omega_functions(h->level(l), w.at(l)))
        CHECK(tilde.state({l, f}) != FunctionState::Inactive);
  }
  CHECK(nested >= 10);
}

TEST_CASE("error norms") {
  auto levels = uniform_levels(1, 1, 4, 1);
  auto h = std::make_shared<const SubdomainHierarchy>(SubdomainHierarchy::trivial(levels));
  auto basis = std::make_shared<const HierBasis>(build_refinable_basis(h));
  const CellSet all = CellSet::full(levels->level(0));
  const ScalarFunction one = [](std::span<const double>) { return 1.0; };
  const HierSplineFunction zero(basis);
  CHECK(std::abs(error_norm(one, zero, NormKind::L2, all) - 1.0) < 1e-14);
  CHECK(std::abs(error_norm(one, zero, NormKind::L1, all) - 1.0) < 1e-14);
  CHECK(error_norm(one, zero, NormKind::Linf, all) == 1.0);

  // Hat function at 1/4 against f = 0 on the first cell: max 1, L2 sqrt(h/3).
  std::vector<double> c(static_cast<std::size_t>(basis->size()), 0.0);
  c[1] = 1.0;
  const HierSplineFunction hat(basis, c);
  CellSet first(levels->level(0));
  first.insert(0);
  const ScalarFunction zf = [](std::span<const double>) { return 0.0; };
  CHECK(std::abs(error_norm(zf, hat, NormKind::Linf, first) - 1.0) < 1e-15);
  CHECK(std::abs(error_norm(zf, hat, NormKind::L2, first) - std::sqrt(0.25 / 3.0)) < 1e-14);
  CHECK(std::abs(error_norm(zf, hat, NormKind::L1, first) - 0.125) < 1e-14);
  // Hat against x -> x on the first cell: |x - 4x| peaks at 3/4.
  const ScalarFunction id = [](std::span<const double> x) { return x[0]; };
  CHECK(std::abs(error_norm(id, hat, NormKind::Linf, first) - 0.75) < 1e-15);

  // s = f in V_0 over a refined hierarchy, on several regions.
  Rng rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    auto hr = random_hierarchy(rng, 1 + trial % 2, 3);
    auto tb = std::make_shared<const HierBasis>(build_refinable_basis(hr));
    std::vector<double> c0(static_cast<std::size_t>(hr->level(0).num_functions()));
    for (auto& v : c0) v = uniform01(rng);
    MultiLevelSpline ml(hr->level_sequence(), 1);
    std::copy(c0.begin(), c0.end(), ml.level(0).begin());
    const HierSplineFunction s = express_in_basis(ml, tb);
    const ScalarFunction f = level_spline(hr->level(0), c0);
    for (const NormKind q : {NormKind::L1, NormKind::L2, NormKind::Linf}) {
      CHECK(error_norm(f, s, q, CellSet::full(hr->level(0))) < 1e-12);
      if (hr->depth() > 1) CHECK(error_norm(f, s, q, hr->subdomain_cells(1)) < 1e-12);
    }
    // The pieces tile the domain.
    double vol = 0.0;
    for (const Box& b : region_pieces(hr->levels(), HierarchicalMesh(*hr), CellSet::full(hr->level(1))))
      vol += b.volume();
    CHECK(std::abs(vol - 1.0) < 1e-14);
  }
  CHECK(parse_norm("inf") == NormKind::Linf);
  CHECK_THROWS_AS((void)parse_norm("3"), ValidationError);
}

TEST_CASE("non-finite callbacks raise evaluation errors") {
  auto levels = uniform_levels(2, 2, 4, 1);
  auto h = std::make_shared<const SubdomainHierarchy>(SubdomainHierarchy::trivial(levels));
  const MultiscaleQuasiInterpolant pi(h);
  const ScalarFunction bad = [](std::span<const double> x) { return x[0] > 0.5 ? std::nan("") : 1.0; };
  try {
    (void)pi.apply(bad);
    FAIL("expected an evaluation error");
  } catch (const EvaluationError& e) {
    CHECK(e.location().size() == 2);
    CHECK(e.location()[0] > 0.5);
  }
}
