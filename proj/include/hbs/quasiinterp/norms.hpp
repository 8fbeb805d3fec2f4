#pragma once

#include <string>
#include <vector>

#include "hbs/hierarchy/spline.hpp"
#include "hbs/quasiinterp/quadrature.hpp"

namespace hbs {

enum class NormKind { L1, L2, Linf };

/// Parses "1", "2" or "inf"; throws ValidationError otherwise.
NormKind parse_norm(const std::string& text);
const char* norm_name(NormKind q);

struct NormConfig {
  /// Gauss points added to p_i + 1 per direction for q = 1, 2.
  int extra_points = 2;
  /// Samples per direction per piece for q = inf, endpoints included; 0
  /// selects 1001, 33 and 11 for d = 1, 2, 3 (at least 10^3 per piece).
  int samples = 0;
};

/// The region cut along the active cells of `mesh`: every piece is the
/// finer of an active cell and a region cell.
std::vector<Box> region_pieces(const LevelSequence& levels, const HierarchicalMesh& mesh, const CellSet& region);

/// ||f - s||_{L^q} over the union of `pieces`, with the rule sized by the
/// per-direction degrees.
double error_norm_on(const ScalarFunction& f, const ScalarFunction& s, const std::vector<Box>& pieces,
                     std::span<const int> degrees, NormKind q, const NormConfig& config = {});

/// ||f - s||_{L^q(region)} for a cell set of any level.
double error_norm(const ScalarFunction& f, const HierSplineFunction& s, NormKind q, const CellSet& region,
                  const NormConfig& config = {});

}  // namespace hbs
