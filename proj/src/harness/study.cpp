#include "hbs/harness/study.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "hbs/common/errors.hpp"
#include "hbs/harness/functions.hpp"

namespace hbs {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, int line) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw ValidationError("csv", "invalid number '" + std::string(text) + "'", "line " + std::to_string(line));
  return v;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double from_number_or_null(const json& j) { return j.is_null() ? kNaN : j.get<double>(); }

}  // namespace

int StudyReport::theoretical_order() const { return s.empty() ? 0 : *std::min_element(s.begin(), s.end()); }

std::string StudyReport::to_csv() const {
  std::string out = "step,level,h,error,order\n";
  for (const auto& r : rows)
    out += std::to_string(r.step) + "," + std::to_string(r.level) + "," + format_double(r.h) + "," +
           format_double(r.error) + "," + format_double(r.order) + "\n";
  return out;
}

json StudyReport::to_json() const {
  json st = json::array(), rs = json::array();
  for (const auto& s : steps)
    st.push_back(json{{"step", s.step},
                      {"fixture", s.fixture},
                      {"H", s.basis_size},
                      {"H_tilde", s.refinable_size},
                      {"strictly_admissible", s.strictly_admissible}});
  for (const auto& r : rows)
    rs.push_back(json{{"step", r.step},
                      {"level", r.level},
                      {"h", r.h},
                      {"error", r.error},
                      {"order", number_or_null(r.order)},
                      {"error_omega", number_or_null(r.error_omega)},
                      {"estimate", r.estimate}});
  return json{{"schema", "hbs-study/1"}, {"function", function}, {"q", norm_name(q)}, {"s", s},
              {"theoretical_order", theoretical_order()}, {"steps", st}, {"rows", rs}};
}

std::vector<StudyRow> parse_study_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "step,level,h,error,order")
    throw ValidationError("csv", "unexpected header", "line 1");
  std::vector<StudyRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      cols.push_back(rest.substr(0, pos));
    cols.push_back(rest);
    if (cols.size() != 5) throw ValidationError("csv", "expected 5 columns", "line " + std::to_string(lineno));
    StudyRow r;
    r.step = static_cast<int>(parse_double(cols[0], lineno));
    r.level = static_cast<int>(parse_double(cols[1], lineno));
    r.h = parse_double(cols[2], lineno);
    r.error = parse_double(cols[3], lineno);
    r.order = parse_double(cols[4], lineno);
    rows.push_back(r);
  }
  return rows;
}

std::vector<StudyRow> study_rows_from_json(const json& doc) {
  std::vector<StudyRow> rows;
  for (const json& j : doc.at("rows")) {
    StudyRow r;
    r.step = j.at("step").get<int>();
    r.level = j.at("level").get<int>();
    r.h = j.at("h").get<double>();
    r.error = j.at("error").get<double>();
    r.order = from_number_or_null(j.at("order"));
    r.error_omega = from_number_or_null(j.at("error_omega"));
    r.estimate = j.at("estimate").get<double>();
    rows.push_back(r);
  }
  return rows;
}

std::vector<std::filesystem::path> family_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw ValidationError("io", "not a directory", dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ValidationError("io", "no fixture files in family", dir.string());
  return files;
}

StudyReport run_convergence_study(const std::vector<Fixture>& family, const StudyConfig& config) {
  StudyReport rep;
  rep.function = config.function;
  rep.q = config.q;
  if (family.empty()) return rep;
  const SubdomainHierarchy& first = *family.front().hierarchy;
  std::vector<int> degrees;
  for (int i = 0; i < first.dim(); ++i) degrees.push_back(first.level(0).degree(i));
  rep.s = config.s.empty() ? degrees : config.s;
  if (config.s.empty())
    for (auto& v : rep.s) ++v;
  if (static_cast<int>(rep.s.size()) != first.dim())
    throw ValidationError("study", "expected " + std::to_string(first.dim()) + " smoothness indices");
  for (int i = 0; i < first.dim(); ++i)
    if (rep.s[static_cast<std::size_t>(i)] < 1 || rep.s[static_cast<std::size_t>(i)] > degrees[static_cast<std::size_t>(i)] + 1)
      throw ValidationError("study", "smoothness index must satisfy 1 <= s_i <= p_i + 1");
  const TestFunction f = make_test_function(config.function, degrees);

  std::vector<StudyRow> previous;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto& h = family[k].hierarchy;
    if (h->dim() != first.dim()) throw ValidationError("study", "dimension changes within the family", family[k].name);
    const MultiscaleQuasiInterpolant pi(h, config.quasi);
    const HierSplineFunction pf = pi.apply(f.value);
    const HierarchicalMesh mesh(*h);
    StudyStep st;
    st.step = static_cast<int>(k);
    st.fixture = family[k].name;
    st.basis_size = build_hierarchical_basis(h).basis.size();
    st.refinable_size = pi.refinable_basis()->size();
    st.strictly_admissible = pi.admissibility().strictly_admissible;
    rep.steps.push_back(st);

    const ScalarFunction sv = [&](std::span<const double> x) { return pf.eval(x); };
    const ScalarFunction zero = [](std::span<const double>) { return 0.0; };
    std::vector<StudyRow> current;
    for (int l = 0; l < h->depth(); ++l) {
      StudyRow r;
      r.step = static_cast<int>(k);
      r.level = l;
      const TensorLevel& lv = h->level(l);
      for (int i = 0; i < h->dim(); ++i) r.h = std::max(r.h, lv.max_cell_size(i));
      const CellSet region = l == 0 ? CellSet::full(lv) : h->subdomain_cells(l);
      const std::vector<Box> pieces = region_pieces(h->levels(), mesh, region);
      r.error = error_norm_on(f.value, sv, pieces, degrees, config.q, config.norm);
      const CellSet& w = pi.omegas().at(l);
      r.error_omega = w.empty() ? kNaN : error_norm_on(f.value, sv, region_pieces(h->levels(), mesh, w), degrees, config.q, config.norm);
      for (int i = 0; i < h->dim(); ++i) {
        const int si = rep.s[static_cast<std::size_t>(i)];
        r.estimate += std::pow(lv.max_cell_size(i), si) *
                      error_norm_on(f.derivative(i, si), zero, pieces, degrees, config.q, config.norm);
      }
      r.order = kNaN;
      for (const auto& p : previous)
        if (p.level == l && p.h != r.h && p.error > 0.0 && r.error > 0.0)
          r.order = std::log(p.error / r.error) / std::log(p.h / r.h);
      current.push_back(r);
    }
    rep.rows.insert(rep.rows.end(), current.begin(), current.end());
    previous = std::move(current);
  }
  return rep;
}

}  // namespace hbs
