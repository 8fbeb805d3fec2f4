// Command-line front end: invariant checks, convergence studies and mesh
// dumps for hierarchy fixtures.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "hbs/common/errors.hpp"
#include "hbs/harness/fixture.hpp"
#include "hbs/harness/invariants.hpp"
#include "hbs/harness/study.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hbs::ValidationError("io", "cannot write file", path);
  out << text;
}

const char* label(hbs::CheckStatus s) {
  switch (s) {
    case hbs::CheckStatus::Pass: return "PASS";
    case hbs::CheckStatus::Fail: return "FAIL";
    case hbs::CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

int run_check(const std::string& fixture, const std::string& report, const hbs::SuiteConfig& cfg, bool quiet) {
  const hbs::Fixture fx = hbs::load_fixture(fixture);
  const hbs::SuiteReport rep = hbs::run_invariant_suite(fx, cfg);
  if (!report.empty()) write_file(report, rep.to_json().dump(2) + "\n");
  if (!quiet) {
    std::printf("fixture %s: #H = %lld, #H~ = %lld, zero weights = %lld\n", rep.fixture.c_str(),
                static_cast<long long>(rep.counts["H"].get<std::int64_t>()),
                static_cast<long long>(rep.counts["H_tilde"].get<std::int64_t>()),
                static_cast<long long>(rep.counts["zero_weights"].get<std::int64_t>()));
    for (const auto& c : rep.checks) {
      std::printf("  %s  %-50s checked %-8lld worst %.3g", label(c.status), c.name.c_str(),
                  static_cast<long long>(c.checked), c.worst);
      if (!c.note.empty()) std::printf("  (%s)", c.note.c_str());
      std::printf("\n");
    }
  }
  return rep.passed() ? 0 : kExitFailure;
}

int run_study(const std::string& dir, const hbs::StudyConfig& cfg, const std::string& csv, const std::string& json) {
  std::vector<hbs::Fixture> family;
  for (const auto& p : hbs::family_files(dir)) family.push_back(hbs::load_fixture(p));
  const hbs::StudyReport rep = hbs::run_convergence_study(family, cfg);
  if (!json.empty()) write_file(json, rep.to_json().dump(2) + "\n");
  if (!csv.empty())
    write_file(csv, rep.to_csv());
  else
    std::cout << rep.to_csv();
  return 0;
}

int run_dump(const std::string& fixture, const std::string& out) {
  const hbs::Fixture fx = hbs::load_fixture(fixture);
  write_file(out, hbs::mesh_dump(fx.name, *fx.hierarchy).dump(1) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical B-spline spaces: invariant checks and convergence studies"};
  app.require_subcommand(1);

  hbs::SuiteConfig suite;
  std::string fixture, report;
  bool quiet = false;
  auto* check = app.add_subcommand("check", "Run the invariant suite on a fixture");
  check->add_option("fixture", fixture, "Fixture file")->required();
  check->add_option("--report", report, "Write the JSON report here");
  check->add_option("--seed", suite.seed, "Random seed");
  check->add_option("--samples", suite.samples, "Random points for pointwise identities");
  check->add_option("--quad-extra", suite.quasi.extra_points, "Extra Gauss points for the dual functionals");
  check->add_flag("--quiet", quiet, "Only set the exit status");

  hbs::StudyConfig study;
  std::string family, q = "2", csv, json;
  auto* st = app.add_subcommand("study", "Convergence study over a family of fixtures");
  st->add_option("family", family, "Directory of fixture files, one per refinement step")->required();
  st->add_option("--f", study.function, "Test function: sin, gauss or poly");
  st->add_option("--q", q, "Norm: 1, 2 or inf");
  st->add_option("--s", study.s, "Smoothness indices, comma separated (default p_i + 1)")->delimiter(',');
  st->add_option("--csv", csv, "Write the CSV here instead of standard output");
  st->add_option("--json", json, "Write the JSON report here");
  st->add_option("--quad-extra", study.quasi.extra_points, "Extra Gauss points for the dual functionals");
  st->add_option("--samples", study.norm.samples, "Samples per direction per piece for q = inf");

  std::string out;
  auto* dump = app.add_subcommand("dump-mesh", "Write the active cells as level-tagged boxes");
  dump->add_option("fixture", fixture, "Fixture file")->required();
  dump->add_option("--out", out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) return run_check(fixture, report, suite, quiet);
    if (*st) {
      study.q = hbs::parse_norm(q);
      return run_study(family, study, csv, json);
    }
    return run_dump(fixture, out);
  } catch (const hbs::ValidationError& e) {
    std::fprintf(stderr, "hbs: %s\n", e.what());
    return kExitInput;
  } catch (const hbs::AdmissibilityError& e) {
    std::fprintf(stderr, "hbs: %s\n", e.what());
    return kExitInput;
  } catch (const hbs::Error& e) {
    std::fprintf(stderr, "hbs: %s\n", e.what());
    return kExitFailure;
  }
}
