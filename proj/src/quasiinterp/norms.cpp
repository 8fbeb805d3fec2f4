#include "hbs/quasiinterp/norms.hpp"

#include <algorithm>
#include <cmath>

#include "hbs/common/errors.hpp"
#include "hbs/common/parallel.hpp"

namespace hbs {

NormKind parse_norm(const std::string& text) {
  if (text == "1") return NormKind::L1;
  if (text == "2") return NormKind::L2;
  if (text == "inf") return NormKind::Linf;
  throw ValidationError("norm", "expected 1, 2 or inf, got '" + text + "'");
}

const char* norm_name(NormKind q) {
  switch (q) {
    case NormKind::L1: return "1";
    case NormKind::L2: return "2";
    case NormKind::Linf: return "inf";
  }
  return "?";
}

std::vector<Box> region_pieces(const LevelSequence& levels, const HierarchicalMesh& mesh, const CellSet& region) {
  const int r = region.level();
  const TensorLevel& rl = levels.level(r);
  std::vector<Box> pieces;
  for (int k = 0; k < mesh.depth(); ++k) {
    const TensorLevel& kl = levels.level(k);
    for (const std::int64_t c : mesh.active(k).members()) {
      const Box a = kl.cell_box(c);
      if (k >= r) {
        // Nested meshes: the active cell lies in exactly one region-level cell.
        std::vector<double> mid(a.lo.size());
        for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = 0.5 * (a.lo[i] + a.hi[i]);
        if (region.contains(rl.locate_cell(mid))) pieces.push_back(a);
      } else {
        for_each_index(rl.cells_overlapping(a), rl.cell_strides(), [&](std::int64_t q, const MultiIndex&) {
          if (region.contains(q)) pieces.push_back(rl.cell_box(q));
        });
      }
    }
  }
  return pieces;
}

double error_norm_on(const ScalarFunction& f, const ScalarFunction& s, const std::vector<Box>& pieces,
                     std::span<const int> degrees, NormKind q, const NormConfig& config) {
  const int d = static_cast<int>(degrees.size());
  std::vector<double> partial(pieces.size(), 0.0);
  if (q == NormKind::Linf) {
    int m = config.samples;
    if (m <= 0) m = d == 1 ? 1001 : d == 2 ? 33 : d == 3 ? 11 : static_cast<int>(std::ceil(std::pow(1000.0, 1.0 / d))) + 1;
    parallel_for(static_cast<std::int64_t>(pieces.size()), [&](std::int64_t k) {
      const Box& b = pieces[static_cast<std::size_t>(k)];
      std::vector<double> x(static_cast<std::size_t>(d));
      std::vector<int> idx(static_cast<std::size_t>(d), 0);
      double worst = 0.0;
      while (true) {
        for (int i = 0; i < d; ++i) {
          const auto u = static_cast<std::size_t>(i);
          x[u] = b.lo[u] + (b.hi[u] - b.lo[u]) * idx[u] / (m - 1);
        }
        worst = std::max(worst, std::abs(checked_eval(f, x) - s(x)));
        int i = 0;
        for (; i < d; ++i) {
          if (++idx[static_cast<std::size_t>(i)] < m) break;
          idx[static_cast<std::size_t>(i)] = 0;
        }
        if (i == d) break;
      }
      partial[static_cast<std::size_t>(k)] = worst;
    });
    return pieces.empty() ? 0.0 : *std::max_element(partial.begin(), partial.end());
  }
  std::vector<int> counts;
  for (int p : degrees) counts.push_back(p + 1 + config.extra_points);
  parallel_for(static_cast<std::int64_t>(pieces.size()), [&](std::int64_t k) {
    const Box& b = pieces[static_cast<std::size_t>(k)];
    const TensorQuadrature rule = tensor_gauss(b.lo, b.hi, counts);
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.size(); ++j) {
      const double e = std::abs(checked_eval(f, rule.point(j)) - s(rule.point(j)));
      acc += rule.weights[j] * (q == NormKind::L1 ? e : e * e);
    }
    partial[static_cast<std::size_t>(k)] = acc;
  });
  double total = 0.0;
  for (double v : partial) total += v;
  return q == NormKind::L1 ? total : std::sqrt(total);
}

double error_norm(const ScalarFunction& f, const HierSplineFunction& s, NormKind q, const CellSet& region,
                  const NormConfig& config) {
  const SubdomainHierarchy& h = s.basis().hierarchy();
  const HierarchicalMesh mesh(h);
  std::vector<int> degrees;
  for (int i = 0; i < h.dim(); ++i) degrees.push_back(h.level(0).degree(i));
  const ScalarFunction sv = [&](std::span<const double> x) { return s.eval(x); };
  return error_norm_on(f, sv, region_pieces(h.levels(), mesh, region), degrees, q, config);
}

}  // namespace hbs
