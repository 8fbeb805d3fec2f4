#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbs/harness/fixture.hpp"
#include "hbs/quasiinterp/norms.hpp"
#include "hbs/quasiinterp/operators.hpp"

namespace hbs {

struct StudyConfig {
  std::string function = "sin";
  NormKind q = NormKind::L2;
  /// Smoothness index per direction; empty means p_i + 1.
  std::vector<int> s;
  QuasiInterpConfig quasi;
  NormConfig norm;
};

/// One level of one refinement step. `error` is measured on Omega_l
/// (Omega_0 is the whole domain) and `error_omega` on omega_l; `estimate`
/// is sum_i h_{l,i}^{s_i} ||D^{s_i}_{x_i} f||_{L^q(Omega_l)}. `order` is
/// log(e_prev / e) / log(h_prev / h) against the same level of the
/// previous step (NaN on the first step).
struct StudyRow {
  int step = 0;
  int level = 0;
  double h = 0.0;
  double error = 0.0;
  double order = 0.0;
  double error_omega = 0.0;
  double estimate = 0.0;
};

struct StudyStep {
  int step = 0;
  std::string fixture;
  std::int64_t basis_size = 0;      ///< #H
  std::int64_t refinable_size = 0;  ///< #H~
  bool strictly_admissible = false;
};

struct StudyReport {
  std::string function;
  NormKind q = NormKind::L2;
  std::vector<int> s;
  std::vector<StudyStep> steps;
  std::vector<StudyRow> rows;

  /// min_i s_i.
  int theoretical_order() const;
  /// Columns step,level,h,error,order; doubles in shortest round-trip form.
  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// Parses the CSV produced by StudyReport::to_csv (error_omega and
/// estimate are left at zero).
std::vector<StudyRow> parse_study_csv(const std::string& text);
/// Reads the rows back from StudyReport::to_json.
std::vector<StudyRow> study_rows_from_json(const nlohmann::json& doc);

/// Fixture files of a family directory (*.json, sorted by name).
std::vector<std::filesystem::path> family_files(const std::filesystem::path& dir);

/// Quasi-interpolates the named test function on every step and records
/// per-level errors. Throws AdmissibilityError when a step's omega domains
/// are not nested.
StudyReport run_convergence_study(const std::vector<Fixture>& family, const StudyConfig& config);

}  // namespace hbs
