#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "generators.hpp"
#include "hbs/common/errors.hpp"
#include "hbs/harness/fixture.hpp"
#include "hbs/harness/functions.hpp"
#include "hbs/harness/invariants.hpp"
#include "hbs/harness/study.hpp"
#include "hbs/hierarchy/basis.hpp"

using namespace hbs;
using namespace hbs::testing;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = HBS_FIXTURE_DIR;
const fs::path kData = HBS_TEST_DATA_DIR;

ValidationError parse_failure(const std::string& text) {
  try {
    (void)parse_fixture(text, "t.json");
  } catch (const ValidationError& e) {
    return e;
  }
  FAIL("expected a validation error");
  return ValidationError("none", "");
}

std::vector<FunctionId> sorted_functions(const HierBasis& b) {
  std::vector<FunctionId> f(b.functions().begin(), b.functions().end());
  std::sort(f.begin(), f.end(), [](const FunctionId& x, const FunctionId& y) {
    return std::pair(x.level, x.index) < std::pair(y.level, y.index);
  });
  return f;
}

void same_hierarchy(const SubdomainHierarchy& a, const SubdomainHierarchy& b) {
  REQUIRE(a.depth() == b.depth());
  REQUIRE(a.dim() == b.dim());
  for (int l = 0; l < a.depth(); ++l)
    for (int i = 0; i < a.dim(); ++i) CHECK(std::ranges::equal(a.level(l).direction(i).knots(), b.level(l).direction(i).knots()));
  for (int k = 0; k + 1 < a.depth(); ++k) CHECK(a.subdomain_cells(k + 1).members() == b.subdomain_cells(k + 1).members());
}

}  // namespace

TEST_CASE("fixture parse errors carry a location") {
  SUBCASE("syntax") {
    const auto e = parse_failure(read_text_file(kData / "bad_syntax.json"));
    CHECK(e.kind() == "fixture");
    CHECK(e.where() == "t.json:5:9");
  }
  SUBCASE("cell index") {
    const auto e = parse_failure(read_text_file(kData / "bad_cell_index.json"));
    CHECK(e.where() == "t.json: /subdomains/0/cells/1/0");
  }
  SUBCASE("nesting") {
    const auto e = parse_failure(read_text_file(kData / "corrupt_nesting.json"));
    CHECK(e.kind() == "hierarchy nesting");
    CHECK(e.where().starts_with("t.json: /subdomains"));
  }
  SUBCASE("fields") {
    CHECK(parse_failure(R"({"schema": "other/1"})").where() == "t.json: /schema");
    CHECK(parse_failure(R"({"schema": "hbs-fixture/1", "dimension": 0, "degrees": [],
      "knots": [], "depth": 1})").where() == "t.json: /dimension");
    const auto e = parse_failure(R"({"schema": "hbs-fixture/1", "dimension": 1, "degrees": [2],
      "knots": [{"uniform": 4}], "depth": 2, "subdomains": [{"level": 1, "cells": [[0]]}]})");
    CHECK(e.where() == "t.json: /subdomains/0/level");
  }
  CHECK_THROWS_AS(load_fixture(kData / "missing.json"), ValidationError);
}

TEST_CASE("fixture formats for knots and subdomains agree") {
  const std::string head = R"({"schema": "hbs-fixture/1", "dimension": 2, "degrees": [2, 1], "depth": 2, )";
  const Fixture a = parse_fixture(head + R"("knots": [{"uniform": 4},
      {"knots": [0, 0, 0.5, 1, 1]}], "subdomains": [{"cells": [[0, 0], [1, 0], [0, 1], [1, 1]]}]})");
  const Fixture b = parse_fixture(head + R"("knots": [{"breakpoints": [0, 0.25, 0.5, 0.75, 1]},
      {"breakpoints": [0, 0.5, 1], "multiplicities": [2, 1, 2]}],
      "subdomains": [{"level": 0, "ranges": [{"lo": [0, 0], "hi": [2, 2]}]}]})");
  const Fixture c = parse_fixture(head + R"("knots": [{"uniform": 4}, {"uniform": 2}],
      "subdomains": [{"boxes": [{"lo": [0, 0], "hi": [0.5, 1]}]}]})");
  same_hierarchy(*a.hierarchy, *b.hierarchy);
  same_hierarchy(*a.hierarchy, *c.hierarchy);
}

TEST_CASE("fixture and mesh dumps round trip") {
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    const Fixture f = load_fixture(entry.path());
    const auto* enl = f.enlargement ? &*f.enlargement : nullptr;
    const Fixture g = parse_fixture(fixture_json(f.name, *f.hierarchy, enl).dump(1));
    CHECK(g.name == f.name);
    same_hierarchy(*f.hierarchy, *g.hierarchy);
    CHECK(g.enlargement.has_value() == f.enlargement.has_value());

    const auto m = parse_mesh_dump(mesh_dump(f.name, *f.hierarchy).dump());
    CHECK(sorted_functions(build_hierarchical_basis(m).basis) ==
          sorted_functions(build_hierarchical_basis(f.hierarchy).basis));
  }
}

TEST_CASE("test functions: derivatives against finite differences") {
  Rng rng(5);
  const double eps = 1e-5;
  for (const auto& name : test_function_names()) {
    for (int d = 1; d <= 3; ++d) {
      const TestFunction f = make_test_function(name, std::vector<int>(static_cast<std::size_t>(d), 3));
      for (int trial = 0; trial < 20; ++trial) {
        auto x = random_point(rng, d);
        for (int i = 0; i < d; ++i) {
          CHECK(f.derivative(i, 0)(x) == doctest::Approx(f.value(x)).epsilon(1e-14));
          for (int s = 1; s <= 4; ++s) {
            const ScalarFunction lower = f.derivative(i, s - 1);
            auto xp = x, xm = x;
            xp[static_cast<std::size_t>(i)] += eps;
            xm[static_cast<std::size_t>(i)] -= eps;
            const double fd = (lower(xp) - lower(xm)) / (2 * eps);
            const double scale = std::max(1.0, std::abs(fd));
            CAPTURE(name);
            CAPTURE(s);
            CHECK(std::abs(f.derivative(i, s)(x) - fd) < 1e-5 * scale * std::pow(10.0, s));
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(make_test_function("cosh", {2}), ValidationError);
}

TEST_CASE("poly test function has degree p") {
  const TestFunction f = make_test_function("poly", {2, 1});
  Rng rng(9);
  for (int k = 0; k < 10; ++k) {
    const auto x = random_point(rng, 2);
    CHECK(std::abs(f.derivative(0, 3)(x)) < 1e-14);
    CHECK(std::abs(f.derivative(1, 2)(x)) < 1e-14);
  }
}

TEST_CASE("suite on the trivial fixture") {
  const Fixture f = load_fixture(kFixtures / "trivial_d1.json");
  const SuiteReport rep = run_invariant_suite(f);
  CHECK(rep.passed());
  for (const auto& c : rep.checks) CHECK_MESSAGE(!c.failed(), c.name);
  const auto b0 = rep.counts["B0"].get<std::int64_t>();
  CHECK(rep.counts["H"].get<std::int64_t>() == b0);
  CHECK(rep.counts["H_tilde"].get<std::int64_t>() == b0);
  const auto j = rep.to_json();
  CHECK(j["fixture"] == "trivial_d1");
  CHECK(j["invariants"].size() == rep.checks.size());
}

TEST_CASE("zero-weight fixtures: H minus H~ is the zero-weight set") {
  for (const char* name : {"zero_weight_strip.json", "zero_weight_arm.json"}) {
    CAPTURE(name);
    const Fixture f = load_fixture(kFixtures / name);
    FixtureContext ctx(f);
    const auto c = ctx.counts();
    const auto gap = c["H"].get<std::int64_t>() - c["H_tilde"].get<std::int64_t>();
    CHECK(gap > 0);
    CHECK(gap == c["zero_weights"].get<std::int64_t>());
    // Every zero-weight function sits at level 1 with all parents active.
    for (const FunctionId& b : ctx.classical()->functions()) {
      if (ctx.weights().at(b).exact != 0) continue;
      CHECK(b.level == 1);
      for (const auto& p : f.hierarchy->levels().parents(b, false)) CHECK(ctx.classical()->is_active(p.id));
    }
    CHECK(run_invariant_suite(f).passed());
  }
}

TEST_CASE("study reports round trip exactly") {
  StudyConfig cfg;
  cfg.function = "gauss";
  std::vector<Fixture> family;
  for (const auto& p : family_files(kFixtures / "families" / "corner_p2")) {
    family.push_back(load_fixture(p));
    if (family.size() == 3) break;
  }
  const StudyReport rep = run_convergence_study(family, cfg);
  REQUIRE(rep.rows.size() == 9);
  CHECK(std::isnan(rep.rows.front().order));

  const auto from_csv = parse_study_csv(rep.to_csv());
  const auto from_json = study_rows_from_json(nlohmann::json::parse(rep.to_json().dump()));
  REQUIRE(from_csv.size() == rep.rows.size());
  REQUIRE(from_json.size() == rep.rows.size());
  auto same = [](double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; };
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    const auto& r = rep.rows[k];
    for (const auto* o : {&from_csv[k], &from_json[k]}) {
      CHECK(o->step == r.step);
      CHECK(o->level == r.level);
      CHECK(same(o->h, r.h));
      CHECK(same(o->error, r.error));
      CHECK(same(o->order, r.order));
    }
    CHECK(same(from_json[k].error_omega, r.error_omega));
    CHECK(same(from_json[k].estimate, r.estimate));
  }
  CHECK(rep.to_csv().starts_with("step,level,h,error,order\n"));
}

TEST_CASE("study: polynomials are reproduced") {
  for (const char* fam : {"uniform_p2", "corner_p2"}) {
    CAPTURE(fam);
    std::vector<Fixture> family;
    for (const auto& p : family_files(kFixtures / "families" / fam)) family.push_back(load_fixture(p));
    family.resize(std::min<std::size_t>(family.size(), 3));
    for (const NormKind q : {NormKind::L1, NormKind::L2, NormKind::Linf}) {
      StudyConfig cfg;
      cfg.function = "poly";
      cfg.q = q;
      const StudyReport rep = run_convergence_study(family, cfg);
      for (const auto& r : rep.rows) {
        CHECK(r.error < 1e-10);
        CHECK(r.error_omega < 1e-10);
      }
    }
  }
}

TEST_CASE("study: smoothness index is validated") {
  std::vector<Fixture> family{load_fixture(kFixtures / "families" / "uniform_p2" / "step0.json")};
  StudyConfig cfg;
  cfg.s = {4};
  CHECK_THROWS_AS(run_convergence_study(family, cfg), ValidationError);
  cfg.s = {2};
  CHECK(run_convergence_study(family, cfg).theoretical_order() == 2);
  cfg.s = {0};
  CHECK_THROWS_AS(run_convergence_study(family, cfg), ValidationError);
}

TEST_CASE("study refuses non-nested omega domains") {
  const Fixture f = parse_fixture(R"({"schema": "hbs-fixture/1", "dimension": 1, "degrees": [1],
    "knots": [{"uniform": 4}], "depth": 3,
    "subdomains": [{"boxes": [{"lo": [0], "hi": [0.25]}]}, {"boxes": [{"lo": [0], "hi": [0.25]}]}]})");
  CHECK_THROWS_AS(run_convergence_study({f}, StudyConfig{}), AdmissibilityError);
  CHECK_THROWS_AS(parse_norm("3"), ValidationError);
  CHECK(parse_norm("inf") == NormKind::Linf);
}
