#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbs/harness/fixture.hpp"
#include "hbs/hierarchy/basis.hpp"
#include "hbs/hierarchy/weights.hpp"
#include "hbs/quasiinterp/operators.hpp"

namespace hbs {

enum class CheckStatus { Pass, Fail, Skip };

/// Outcome of one invariant on one fixture. `worst` is the largest
/// residual seen (0 for purely combinatorial checks).
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::int64_t checked = 0;
  double worst = 0.0;
  double tolerance = 0.0;
  std::string note;

  bool failed() const { return status == CheckStatus::Fail; }
  nlohmann::json to_json() const;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  /// Random points for pointwise identities (partition of unity, tiling).
  int samples = 1000;
  /// Random parents and points per parent for the two-scale check.
  int parents = 200;
  int parent_points = 100;
  /// Random points per level for the operator identities.
  int operator_points = 200;
  /// Dyadic points for the exact partition of unity.
  int exact_points = 50;
  /// Largest #H for the dense rank test.
  std::int64_t max_rank_functions = 800;
  QuasiInterpConfig quasi;
};

/// Everything derived from a fixture once and shared by the checks.
class FixtureContext {
 public:
  explicit FixtureContext(Fixture fixture, QuasiInterpConfig quasi = {});

  const Fixture& fixture() const { return fixture_; }
  const std::shared_ptr<const SubdomainHierarchy>& hierarchy() const { return fixture_.hierarchy; }
  const std::shared_ptr<const HierBasis>& classical() const { return classical_; }
  const HierarchicalMesh& mesh() const { return mesh_; }
  const std::shared_ptr<const HierBasis>& refinable() const { return tilde_; }
  const WeightTable& weights() const { return weights_; }
  const MultiscaleQuasiInterpolant& quasi_interpolant() const { return *pi_; }

  nlohmann::json counts() const;

 private:
  Fixture fixture_;
  std::shared_ptr<const HierBasis> classical_;
  HierarchicalMesh mesh_;
  std::shared_ptr<const HierBasis> tilde_;
  WeightTable weights_;
  std::unique_ptr<MultiscaleQuasiInterpolant> pi_;
};

using CheckRng = std::mt19937_64;

CheckResult check_partition_of_unity(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_exact_partition_of_unity(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_two_scale(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_characterization(const FixtureContext& ctx);
CheckResult check_linear_independence(const FixtureContext& ctx, const SuiteConfig& cfg);
CheckResult check_mesh_tiling(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_initial_space(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_omega_parents(const FixtureContext& ctx);
CheckResult check_omega_functions_refinable(const FixtureContext& ctx);
CheckResult check_duality(const FixtureContext& ctx);
CheckResult check_level_reproduction(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_multiscale(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_enlargement(const FixtureContext& ctx, const SuiteConfig& cfg, CheckRng& rng);
CheckResult check_mesh_round_trip(const FixtureContext& ctx);

struct SuiteReport {
  std::string fixture;
  nlohmann::json counts;
  std::vector<CheckResult> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs every check on the fixture. Each check draws from its own
/// generator seeded from cfg.seed, so results do not depend on order.
SuiteReport run_invariant_suite(const Fixture& fixture, const SuiteConfig& cfg = {});

}  // namespace hbs
