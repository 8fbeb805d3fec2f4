#pragma once

// Shared generators for the unit tests.

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "hbs/univariate/knot_vector.hpp"

namespace hbs::testing {

using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random p-open knot vector with dyadic breakpoints (multiples of 1/32)
/// and random interior multiplicities.
inline KnotVector random_knot_vector(Rng& rng, int degree, int max_interior = 5) {
  const int interior = uniform_int(rng, 0, max_interior);
  std::set<int> picks;
  while (static_cast<int>(picks.size()) < interior) picks.insert(uniform_int(rng, 1, 31));
  Breakpoints bp;
  bp.values.push_back(0.0);
  bp.multiplicities.push_back(degree + 1);
  for (int v : picks) {
    bp.values.push_back(v / 32.0);
    bp.multiplicities.push_back(uniform_int(rng, 1, degree + 1));
  }
  bp.values.push_back(1.0);
  bp.multiplicities.push_back(degree + 1);
  return KnotVector::from_breakpoints(degree, bp);
}

}  // namespace hbs::testing
