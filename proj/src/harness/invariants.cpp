#include "hbs/harness/invariants.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <set>

#include "hbs/common/errors.hpp"
#include "hbs/harness/functions.hpp"
#include "hbs/hierarchy/enlarge.hpp"
#include "hbs/hierarchy/spline.hpp"
#include "hbs/univariate/bspline.hpp"

namespace hbs {

using nlohmann::json;

namespace {

double uniform(CheckRng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

std::vector<double> random_point(CheckRng& rng, int d) {
  std::vector<double> x(static_cast<std::size_t>(d));
  for (auto& v : x) v = uniform(rng);
  return x;
}

std::vector<double> point_in_box(CheckRng& rng, const Box& b) {
  std::vector<double> x;
  for (std::size_t i = 0; i < b.lo.size(); ++i) x.push_back(b.lo[i] + (b.hi[i] - b.lo[i]) * uniform(rng));
  return x;
}

std::vector<double> point_in_cells(CheckRng& rng, const TensorLevel& lv, const std::vector<std::int64_t>& cells) {
  const auto k = std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng);
  return point_in_box(rng, lv.cell_box(cells[k]));
}

CheckResult make(std::string name, double tolerance = 0.0) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  return r;
}

/// Marks the result failed when the worst residual exceeds the tolerance.
CheckResult& settle(CheckResult& r) {
  if (!(r.worst <= r.tolerance)) r.status = CheckStatus::Fail;
  return r;
}

template <class Body>
CheckResult guarded(CheckResult r, Body&& body) {
  try {
    body(r);
  } catch (const Error& e) {
    r.status = CheckStatus::Fail;
    r.note = e.what();
  }
  return r;
}

ScalarFunction level_spline(const TensorLevel& lv, std::vector<double> c) {
  return [&lv, c = std::move(c)](std::span<const double> x) {
    double v = 0.0;
    lv.for_each_nonzero(x, [&](std::int64_t f, double b) { v += c[static_cast<std::size_t>(f)] * b; });
    return v;
  };
}

Rational exact_eval(const TensorLevel& lv, std::int64_t f, const std::vector<Rational>& x) {
  const MultiIndex m = lv.function_multi(f);
  Rational v = 1;
  for (int i = 0; i < lv.dim() && v != 0; ++i) {
    const KnotVector& kv = lv.direction(i);
    std::vector<Rational> local;
    for (int k = 0; k < kv.degree() + 2; ++k) local.push_back(to_rational(kv.knot(m[static_cast<std::size_t>(i)] + k)));
    v *= eval_bspline<Rational>(local, x[static_cast<std::size_t>(i)]);
  }
  return v;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

}  // namespace

json CheckResult::to_json() const {
  json j{{"name", name}, {"status", status_name(status)}, {"checked", checked}};
  j["worst"] = std::isfinite(worst) ? json(worst) : json(nullptr);
  j["tolerance"] = tolerance;
  if (!note.empty()) j["note"] = note;
  return j;
}

FixtureContext::FixtureContext(Fixture fixture, QuasiInterpConfig quasi)
    : fixture_(std::move(fixture)),
      classical_(std::make_shared<const HierBasis>(build_hierarchical_basis(fixture_.hierarchy).basis)),
      mesh_(*fixture_.hierarchy),
      tilde_(std::make_shared<const HierBasis>(build_refinable_basis(fixture_.hierarchy))),
      weights_(compute_weights(*fixture_.hierarchy)),
      pi_(std::make_unique<MultiscaleQuasiInterpolant>(fixture_.hierarchy, quasi)) {}

json FixtureContext::counts() const {
  const SubdomainHierarchy& h = *hierarchy();
  std::vector<int> degrees;
  for (int i = 0; i < h.dim(); ++i) degrees.push_back(h.level(0).degree(i));
  std::int64_t zeros = 0;
  for (const FunctionId& f : classical_->functions()) zeros += weights_.at(f).exact == 0;
  std::vector<std::int64_t> omega_sizes;
  for (int l = 0; l < h.depth(); ++l) omega_sizes.push_back(pi_->omegas().at(l).size());
  return json{{"dimension", h.dim()},
              {"degrees", degrees},
              {"depth", h.depth()},
              {"B0", h.level(0).num_functions()},
              {"H", classical_->size()},
              {"H_tilde", tilde_->size()},
              {"zero_weights", zeros},
              {"active_cells", mesh_.size()},
              {"omega_cells", omega_sizes},
              {"strictly_admissible", pi_->admissibility().strictly_admissible},
              {"omega_nested", pi_->admissibility().omega_nested},
              {"dyadic", h.levels().dyadic()}};
}

CheckResult check_partition_of_unity(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("partition of unity", 1e-12), [&](CheckResult& r) {
    for (const auto& basis : {ctx.classical(), ctx.refinable()}) {
      std::vector<double> a;
      for (const FunctionId& f : basis->functions()) a.push_back(ctx.weights().at(f).value);
      const HierSplineFunction s(basis, a);
      for (int k = 0; k < cfg.samples; ++k) {
        r.worst = std::max(r.worst, std::abs(s.eval(random_point(rng, ctx.hierarchy()->dim())) - 1.0));
        ++r.checked;
      }
    }
    settle(r);
  });
}

CheckResult check_exact_partition_of_unity(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("exact partition of unity"), [&](CheckResult& r) {
    const SubdomainHierarchy& h = *ctx.hierarchy();
    const int d = h.dim();
    for (int k = 0; k < cfg.exact_points; ++k) {
      std::vector<Rational> xr;
      std::vector<double> xd;
      for (int i = 0; i < d; ++i) {
        const int num = std::uniform_int_distribution<int>(0, 1024)(rng);
        xr.emplace_back(num, 1024);
        xd.push_back(num / 1024.0);
      }
      for (const auto& basis : {ctx.classical(), ctx.refinable()}) {
        Rational sum = 0;
        for (int l = 0; l < h.depth(); ++l)
          h.level(l).for_each_nonzero(xd, [&](std::int64_t f, double) {
            const FunctionId id{l, f};
            if (!basis->is_active(id)) return;
            const Rational& a = ctx.weights().at(id).exact;
            if (a != 0) sum += a * exact_eval(h.level(l), f, xr);
          });
        ++r.checked;
        if (sum != 1) {
          r.status = CheckStatus::Fail;
          r.worst = std::max(r.worst, std::abs(to_double(sum) - 1.0));
        }
      }
    }
  });
}

CheckResult check_two_scale(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("two-scale relation", 1e-12), [&](CheckResult& r) {
    const LevelSequence& levels = ctx.hierarchy()->levels();
    if (levels.depth() < 2) {
      r.status = CheckStatus::Skip;
      r.note = "single level";
      return;
    }
    for (int k = 0; k < cfg.parents; ++k) {
      const int l = std::uniform_int_distribution<int>(0, levels.depth() - 2)(rng);
      const TensorLevel& lv = levels.level(l);
      const std::int64_t f = std::uniform_int_distribution<std::int64_t>(0, lv.num_functions() - 1)(rng);
      const auto kids = levels.children({l, f});
      const Box supp = lv.support(f);
      for (int j = 0; j < cfg.parent_points; ++j) {
        const auto x = point_in_box(rng, supp);
        double v = 0.0;
        for (const auto& c : kids) {
          if (!(c.coefficient > 0.0)) r.status = CheckStatus::Fail;
          v += c.coefficient * levels.level(l + 1).eval(c.id.index, x);
        }
        r.worst = std::max(r.worst, std::abs(v - lv.eval(f, x)));
        ++r.checked;
      }
    }
    settle(r);
  });
}

CheckResult check_characterization(const FixtureContext& ctx) {
  return guarded(make("H~ characterization"), [&](CheckResult& r) {
    const SubdomainHierarchy& h = *ctx.hierarchy();
    const HierBasis& H = *ctx.classical();
    const HierBasis& T = *ctx.refinable();
    const WeightTable& w = ctx.weights();
    std::int64_t zeros = 0;
    for (const FunctionId& f : H.functions()) {
      ++r.checked;
      const bool positive = w.at(f).exact > 0;
      zeros += !positive;
      if (positive != T.is_active(f)) {
        r.status = CheckStatus::Fail;
        r.note = "H~ differs from the positive-weight part of H";
      }
      // Zero-weight level-1 functions have all their parents active.
      if (!positive && f.level == 1)
        for (const auto& p : h.levels().parents(f, false))
          if (!H.is_active(p.id)) {
            r.status = CheckStatus::Fail;
            r.note = "zero-weight level-1 function with a deactivated parent";
          }
    }
    for (const FunctionId& f : T.functions())
      if (!H.is_active(f)) {
        r.status = CheckStatus::Fail;
        r.note = "H~ is not contained in H";
      }
    for (int l = 1; l < h.depth(); ++l)
      for (std::int64_t f = 0; f < h.level(l).num_functions(); ++f) {
        const FunctionId id{l, f};
        if (!w.defined(id)) continue;
        ++r.checked;
        if (zero_weight_by_characterization(id, h, w) != (w.at(id).exact == 0)) {
          r.status = CheckStatus::Fail;
          r.note = "weight recursion and parent characterization disagree";
        }
      }
    if (H.size() - T.size() != zeros) r.status = CheckStatus::Fail;
    r.worst = 0.0;
  });
}

CheckResult check_linear_independence(const FixtureContext& ctx, const SuiteConfig& cfg) {
  return guarded(make("linear independence of H"), [&](CheckResult& r) {
    const SubdomainHierarchy& h = *ctx.hierarchy();
    const HierBasis& H = *ctx.classical();
    if (H.size() > cfg.max_rank_functions) {
      r.status = CheckStatus::Skip;
      r.note = "#H above the dense rank limit";
      return;
    }
    const int d = h.dim();
    // p_i + 1 interior points per direction on each active cell determine
    // the polynomial piece there.
    std::vector<std::vector<double>> pts;
    for (const CellId& c : ctx.mesh().cells()) {
      const TensorLevel& lv = h.level(c.level);
      const Box b = lv.cell_box(c.index);
      std::vector<int> ext;
      IndexRange grid;
      for (int i = 0; i < d; ++i) {
        ext.push_back(lv.degree(i) + 1);
        grid.lo.push_back(0);
        grid.hi.push_back(lv.degree(i) + 1);
      }
      for_each_index(grid, strides_for(ext), [&](std::int64_t, const MultiIndex& m) {
        std::vector<double> x;
        for (int i = 0; i < d; ++i) {
          const auto u = static_cast<std::size_t>(i);
          x.push_back(b.lo[u] + (b.hi[u] - b.lo[u]) * (m[u] + 1.0) / (lv.degree(i) + 2.0));
        }
        pts.push_back(std::move(x));
      });
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(H.size()));
    for (std::size_t row = 0; row < pts.size(); ++row)
      for (int l = 0; l < h.depth(); ++l)
        h.level(l).for_each_nonzero(pts[row], [&](std::int64_t f, double v) {
          const std::int64_t col = H.position({l, f});
          if (col >= 0) a(static_cast<Eigen::Index>(row), col) = v;
        });
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    r.checked = H.size();
    if (qr.rank() != H.size()) {
      r.status = CheckStatus::Fail;
      r.note = "rank " + std::to_string(qr.rank()) + " < " + std::to_string(H.size());
    }
  });
}

CheckResult check_mesh_tiling(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("active cells tile the domain"), [&](CheckResult& r) {
    const SubdomainHierarchy& h = *ctx.hierarchy();
    if (ctx.mesh().exact_volume(h.levels()) != 1) {
      r.status = CheckStatus::Fail;
      r.note = "total active volume differs from 1";
    }
    for (int k = 0; k < cfg.samples; ++k) {
      ++r.checked;
      if (ctx.mesh().cells_with_interior_point(h.levels(), random_point(rng, h.dim())).size() != 1) r.status = CheckStatus::Fail;
    }
  });
}

CheckResult check_initial_space(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("V_0 inside Span H and Span H~", 1e-10), [&](CheckResult& r) {
    const SubdomainHierarchy& h = *ctx.hierarchy();
    MultiLevelSpline s(h.level_sequence(), h.depth());
    for (auto& v : s.level(0)) v = 2.0 * uniform(rng) - 1.0;
    for (const auto& basis : {ctx.classical(), ctx.refinable()}) {
      const HierSplineFunction e = express_in_basis(s, basis);
      for (int k = 0; k < cfg.operator_points; ++k) {
        const auto x = random_point(rng, h.dim());
        r.worst = std::max(r.worst, std::abs(e.eval(x) - s.eval_level(0, x)));
        ++r.checked;
      }
    }
    settle(r);
  });
}

CheckResult check_omega_parents(const FixtureContext& ctx) {
  return guarded(make("omega functions have a parent inside Omega_{l+1}"), [&](CheckResult& r) {
    const SubdomainHierarchy& h = *ctx.hierarchy();
    if (!h.levels().dyadic()) {
      r.status = CheckStatus::Skip;
      r.note = "levels are not dyadic";
      return;
    }
    const OmegaDomains& w = ctx.quasi_interpolant().omegas();
    for (int l = 1; l < h.depth(); ++l) r.checked += static_cast<std::int64_t>(omega_functions(h.level(l), w.at(l)).size());
    const auto bad = omega_parent_violations(h, w);
    if (!bad.empty()) {
      r.status = CheckStatus::Fail;
      r.note = std::to_string(bad.size()) + " violations, first at level " + std::to_string(bad.front().level) +
               " function " + std::to_string(bad.front().index);
    }
  });
}

CheckResult check_omega_functions_refinable(const FixtureContext& ctx) {
  return guarded(make("B_{l,omega_l} inside H~_l"), [&](CheckResult& r) {
    const MultiscaleQuasiInterpolant& pi = ctx.quasi_interpolant();
    if (!pi.omegas().nested) {
      r.status = CheckStatus::Skip;
      r.note = "omega domains are not nested";
      return;
    }
    for (int l = 0; l < pi.depth(); ++l)
      for (const std::int64_t f : pi.level(l).members()) {
        ++r.checked;
        if (ctx.refinable()->state({l, f}) == FunctionState::Inactive) {
          r.status = CheckStatus::Fail;
          r.note = "level " + std::to_string(l) + " function " + std::to_string(f) + " is not in H~_l";
        }
      }
  });
}

CheckResult check_duality(const FixtureContext& ctx) {
  return guarded(make("dual basis Kronecker property", 1e-10), [&](CheckResult& r) {
    const MultiscaleQuasiInterpolant& pi = ctx.quasi_interpolant();
    for (int l = 0; l < pi.depth(); ++l) {
      const LevelQuasiInterpolant& op = pi.level(l);
      const TensorLevel& lv = op.tensor_level();
      for (const std::int64_t j : op.members()) {
        const std::vector<double> row = op.apply([&](std::span<const double> x) { return lv.eval(j, x); });
        for (const std::int64_t i : op.members()) {
          r.worst = std::max(r.worst, std::abs(row[static_cast<std::size_t>(i)] - (i == j ? 1.0 : 0.0)));
          ++r.checked;
        }
      }
    }
    settle(r);
  });
}

CheckResult check_level_reproduction(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("P_l reproduces V_omega_l", 1e-10), [&](CheckResult& r) {
    const MultiscaleQuasiInterpolant& pi = ctx.quasi_interpolant();
    const int d = ctx.hierarchy()->dim();
    for (int l = 0; l < pi.depth(); ++l) {
      const LevelQuasiInterpolant& op = pi.level(l);
      if (op.members().empty()) continue;
      const TensorLevel& lv = op.tensor_level();
      std::vector<double> c(static_cast<std::size_t>(lv.num_functions()), 0.0);
      for (const std::int64_t b : op.members()) c[static_cast<std::size_t>(b)] = 2.0 * uniform(rng) - 1.0;
      const ScalarFunction s = level_spline(lv, c);
      const ScalarFunction ps = level_spline(lv, op.apply(s));
      for (int k = 0; k < cfg.operator_points; ++k) {
        const auto x = random_point(rng, d);
        r.worst = std::max(r.worst, std::abs(ps(x) - s(x)));
        ++r.checked;
      }
      // Any s in V_l is reproduced on omega_l.
      std::vector<double> full(static_cast<std::size_t>(lv.num_functions()));
      for (auto& v : full) v = 2.0 * uniform(rng) - 1.0;
      const ScalarFunction sf = level_spline(lv, full);
      const ScalarFunction psf = level_spline(lv, op.apply(sf));
      const auto cells = op.omega().members();
      for (int k = 0; k < cfg.operator_points; ++k) {
        const auto x = point_in_cells(rng, lv, cells);
        r.worst = std::max(r.worst, std::abs(psf(x) - sf(x)));
        ++r.checked;
      }
    }
    settle(r);
  });
}

CheckResult check_multiscale(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("multiscale quasi-interpolant identities", 1e-10), [&](CheckResult& r) {
    const MultiscaleQuasiInterpolant& pi = ctx.quasi_interpolant();
    const SubdomainHierarchy& h = *ctx.hierarchy();
    const int d = h.dim();
    if (!pi.omegas().nested) {
      try {
        (void)pi.apply([](std::span<const double>) { return 0.0; });
        r.status = CheckStatus::Fail;
        r.note = "omega domains are not nested but the operator did not refuse";
      } catch (const AdmissibilityError&) {
        r.status = CheckStatus::Skip;
        r.note = "omega domains are not nested; refusal verified";
      }
      return;
    }
    auto track = [&](double residual) {
      r.worst = std::max(r.worst, residual);
      ++r.checked;
    };
    // Pi s = s on V_0, and tensor polynomials of degree p.
    const TensorLevel& l0 = h.level(0);
    std::vector<double> c0(static_cast<std::size_t>(l0.num_functions()));
    for (auto& v : c0) v = 2.0 * uniform(rng) - 1.0;
    const ScalarFunction s0 = level_spline(l0, c0);
    const HierSplineFunction ps0 = pi.apply(s0);
    std::vector<int> degrees;
    for (int i = 0; i < d; ++i) degrees.push_back(l0.degree(i));
    const TestFunction poly = make_test_function("poly", degrees);
    const HierSplineFunction ppoly = pi.apply(poly.value);
    for (int k = 0; k < cfg.operator_points; ++k) {
      const auto x = random_point(rng, d);
      track(std::abs(ps0.eval(x) - s0(x)));
      track(std::abs(ppoly.eval(x) - poly.value(x)));
    }
    // Over H~ against the raw recursion, then the decomposition and the
    // stage identity on each omega_l.
    const TestFunction g = make_test_function("gauss", degrees);
    const MultiLevelSpline raw = pi.recursion(g.value);
    const HierSplineFunction pg = pi.apply(g.value);
    for (int k = 0; k < cfg.operator_points; ++k) {
      const auto x = random_point(rng, d);
      track(std::abs(pg.eval(x) - raw.eval(x)));
    }
    for (int l = 0; l < pi.depth(); ++l) {
      const auto cells = pi.omegas().at(l).members();
      if (cells.empty()) continue;
      const TensorLevel& lv = h.level(l);
      const MultiLevelSpline dec = pi.decomposition(l, g.value);
      const ScalarFunction pl = level_spline(lv, pi.level(l).apply(g.value));
      for (int k = 0; k < cfg.operator_points; ++k) {
        const auto x = point_in_cells(rng, lv, cells);
        track(std::abs(dec.eval(x) - raw.eval(x)));
        double stage = 0.0;
        for (int j = 0; j <= l; ++j) stage += raw.eval_level(j, x);
        track(std::abs(stage - pl(x)));
      }
    }
    settle(r);
  });
}

CheckResult check_enlargement(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng) {
  return guarded(make("enlargement: monotone weights and nested spans", 1e-10), [&](CheckResult& r) {
    if (!ctx.fixture().enlargement) {
      r.status = CheckStatus::Skip;
      r.note = "no enlargement section";
      return;
    }
    const SubdomainHierarchy& h = *ctx.hierarchy();
    auto star = std::make_shared<const SubdomainHierarchy>(enlarge_hierarchy(h, *ctx.fixture().enlargement));
    const WeightTable ws = compute_weights(*star);
    const WeightTable& w = ctx.weights();
    for (int l = 0; l < h.depth(); ++l)
      for (std::int64_t f = 0; f < h.level(l).num_functions(); ++f) {
        const FunctionId id{l, f};
        if (!w.defined(id)) continue;
        ++r.checked;
        if (!ws.defined(id) || ws.at(id).exact < w.at(id).exact) {
          r.status = CheckStatus::Fail;
          r.note = "weight decreased at level " + std::to_string(l) + " function " + std::to_string(f);
        }
      }
    auto tstar = std::make_shared<const HierBasis>(build_refinable_basis(star));
    const int pts = std::max(1, cfg.parent_points / 10);
    for (const FunctionId& f : ctx.refinable()->functions()) {
      MultiLevelSpline s(star->level_sequence(), star->depth());
      s[f] = 1.0;
      const HierSplineFunction e = express_in_basis(s, tstar);
      const Box supp = h.level(f.level).support(f.index);
      for (int k = 0; k < pts; ++k) {
        const auto x = point_in_box(rng, supp);
        r.worst = std::max(r.worst, std::abs(e.eval(x) - h.level(f.level).eval(f.index, x)));
        ++r.checked;
      }
    }
    settle(r);
  });
}

CheckResult check_mesh_round_trip(const FixtureContext& ctx) {
  return guarded(make("mesh dump round trip"), [&](CheckResult& r) {
    const SubdomainHierarchy& h = *ctx.hierarchy();
    const std::string text = mesh_dump(ctx.fixture().name, h).dump();
    auto rebuilt = parse_mesh_dump(text, "mesh dump");
    r.checked = ctx.mesh().size();
    if (!(*rebuilt == h)) {
      r.status = CheckStatus::Fail;
      r.note = "rebuilt hierarchy differs";
      return;
    }
    if (!build_hierarchical_basis(rebuilt).basis.same_functions(*ctx.classical())) {
      r.status = CheckStatus::Fail;
      r.note = "rebuilt basis differs";
    }
  });
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
}

json SuiteReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) list.push_back(c.to_json());
  return json{{"schema", "hbs-report/1"}, {"fixture", fixture}, {"passed", passed()}, {"counts", counts}, {"invariants", list}};
}

SuiteReport run_invariant_suite(const Fixture& fixture, const SuiteConfig& cfg) {
  const FixtureContext ctx(fixture, cfg.quasi);
  SuiteReport rep;
  rep.fixture = fixture.name;
  rep.counts = ctx.counts();
  std::uint64_t stream = 0;
  auto rng = [&] { return CheckRng(cfg.seed * 0x9E3779B97F4A7C15ULL + ++stream); };
  CheckRng r1 = rng(), r2 = rng(), r3 = rng(), r4 = rng(), r5 = rng(), r6 = rng(), r7 = rng(), r8 = rng();
  rep.checks.push_back(check_partition_of_unity(ctx, cfg, r1));
  rep.checks.push_back(check_exact_partition_of_unity(ctx, cfg, r2));
  rep.checks.push_back(check_two_scale(ctx, cfg, r3));
  rep.checks.push_back(check_characterization(ctx));
  rep.checks.push_back(check_linear_independence(ctx, cfg));
  rep.checks.push_back(check_mesh_tiling(ctx, cfg, r4));
  rep.checks.push_back(check_initial_space(ctx, cfg, r5));
  rep.checks.push_back(check_omega_parents(ctx));
  rep.checks.push_back(check_omega_functions_refinable(ctx));
  rep.checks.push_back(check_duality(ctx));
  rep.checks.push_back(check_level_reproduction(ctx, cfg, r6));
  rep.checks.push_back(check_multiscale(ctx, cfg, r7));
  rep.checks.push_back(check_enlargement(ctx, cfg, r8));
  rep.checks.push_back(check_mesh_round_trip(ctx));
  return rep;
}

}  // namespace hbs
