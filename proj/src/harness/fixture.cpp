#include "hbs/harness/fixture.hpp"

#include <fstream>
#include <sstream>

#include "hbs/common/errors.hpp"
#include "hbs/hierarchy/enlarge.hpp"

namespace hbs {

using nlohmann::json;

namespace {

/// Field access with JSON-pointer locations in every diagnostic.
class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message, const std::string& kind = "fixture") const {
    throw ValidationError(kind, message, where(path));
  }
  std::string where(const std::string& path) const { return source_ + ": " + (path.empty() ? "/" : path); }

  const json& field(const json& obj, const std::string& path, const std::string& key) const {
    if (!obj.is_object()) fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path + "/" + key, "missing field");
    return *it;
  }
  const json* optional(const json& obj, const std::string& key) const {
    const auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
  }
  const json& array(const json& j, const std::string& path) const {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
  }
  int integer(const json& j, const std::string& path) const {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
  }
  double number(const json& j, const std::string& path) const {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
  }
  std::vector<int> integers(const json& j, const std::string& path) const {
    std::vector<int> out;
    for (std::size_t k = 0; k < array(j, path).size(); ++k) out.push_back(integer(j[k], path + "/" + std::to_string(k)));
    return out;
  }
  std::vector<double> numbers(const json& j, const std::string& path) const {
    std::vector<double> out;
    for (std::size_t k = 0; k < array(j, path).size(); ++k) out.push_back(number(j[k], path + "/" + std::to_string(k)));
    return out;
  }

 private:
  std::string source_;
};

json parse_document(const std::string& text, const std::string& source, const char* schema) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError("fixture", "syntax error: " + std::string(e.what()),
                          source + ":" + std::to_string(line) + ":" + std::to_string(col));
  }
  const Reader r(source);
  const json& s = r.field(doc, "", "schema");
  if (!s.is_string() || s.get<std::string>() != schema)
    r.fail("/schema", std::string("expected \"") + schema + "\"");
  return doc;
}

KnotVector read_knot_vector(const Reader& r, const json& j, const std::string& path, int degree) {
  try {
    if (const json* u = r.optional(j, "uniform")) {
      const int n = r.integer(*u, path + "/uniform");
      if (n < 1) r.fail(path + "/uniform", "interval count must be positive");
      return KnotVector::uniform(degree, n);
    }
    if (const json* k = r.optional(j, "knots")) return KnotVector(degree, r.numbers(*k, path + "/knots"));
    Breakpoints bp;
    bp.values = r.numbers(r.field(j, path, "breakpoints"), path + "/breakpoints");
    if (const json* m = r.optional(j, "multiplicities")) {
      bp.multiplicities = r.integers(*m, path + "/multiplicities");
    } else {
      for (std::size_t k = 0; k < bp.values.size(); ++k)
        bp.multiplicities.push_back(k == 0 || k + 1 == bp.values.size() ? degree + 1 : 1);
    }
    return KnotVector::from_breakpoints(degree, bp);
  } catch (const ValidationError& e) {
    if (e.kind() == "fixture") throw;
    throw ValidationError(e.kind(), e.message(), r.where(path));
  }
}

json knot_vector_json(const KnotVector& kv) {
  const Breakpoints bp = kv.breakpoints();
  return json{{"breakpoints", bp.values}, {"multiplicities", bp.multiplicities}};
}

struct Header {
  std::string name;
  int depth = 1;
  std::shared_ptr<const LevelSequence> levels;
};

Header read_header(const Reader& r, const json& doc, int depth) {
  Header h;
  if (const json* n = r.optional(doc, "name")) {
    if (!n->is_string()) r.fail("/name", "expected a string");
    h.name = n->get<std::string>();
  }
  const int d = r.integer(r.field(doc, "", "dimension"), "/dimension");
  if (d < 1 || d > kMaxDimension) r.fail("/dimension", "dimension must be between 1 and " + std::to_string(kMaxDimension));
  const std::vector<int> degrees = r.integers(r.field(doc, "", "degrees"), "/degrees");
  if (static_cast<int>(degrees.size()) != d) r.fail("/degrees", "expected " + std::to_string(d) + " degrees");
  const json& knots = r.array(r.field(doc, "", "knots"), "/knots");
  if (static_cast<int>(knots.size()) != d) r.fail("/knots", "expected one knot vector per direction");
  std::vector<KnotVector> initial;
  for (int i = 0; i < d; ++i)
    initial.push_back(read_knot_vector(r, knots[static_cast<std::size_t>(i)], "/knots/" + std::to_string(i),
                                       degrees[static_cast<std::size_t>(i)]));
  h.depth = depth;
  if (h.depth < 1) r.fail("/depth", "depth must be at least 1");
  int count = h.depth;
  if (const json* l = r.optional(doc, "levels")) {
    count = r.integer(*l, "/levels");
    if (count < h.depth) r.fail("/levels", "fewer levels than the hierarchy depth");
  }

  RefinementRule rule;
  const json* ref = r.optional(doc, "refinement");
  if (ref && !(ref->is_string() && ref->get<std::string>() == "dyadic")) {
    const json& ex = r.array(r.field(*ref, "/refinement", "explicit"), "/refinement/explicit");
    rule.kind = RefinementRule::Kind::Explicit;
    for (std::size_t l = 0; l < ex.size(); ++l) {
      const std::string lp = "/refinement/explicit/" + std::to_string(l);
      if (r.array(ex[l], lp).size() != static_cast<std::size_t>(d)) r.fail(lp, "expected one knot vector per direction");
      std::vector<KnotVector> kvs;
      for (int i = 0; i < d; ++i)
        kvs.push_back(read_knot_vector(r, ex[l][static_cast<std::size_t>(i)], lp + "/" + std::to_string(i),
                                       degrees[static_cast<std::size_t>(i)]));
      rule.explicit_levels.push_back(std::move(kvs));
    }
    if (!r.optional(doc, "levels")) count = std::max(count, static_cast<int>(ex.size()) + 1);
    if (static_cast<int>(ex.size()) < count - 1)
      r.fail("/refinement/explicit", "expected knot vectors for " + std::to_string(count - 1) + " refined levels");
  }
  try {
    h.levels = std::make_shared<const LevelSequence>(build_level_sequence(initial, count, rule));
  } catch (const NestingViolation& e) {
    throw ValidationError(e.kind(), e.message(), r.where("/refinement") + ", " + e.where());
  }
  return h;
}

/// Cells from "cells" (multi-indices), "ranges" (half-open index boxes)
/// and "boxes" (coordinate boxes; every cell overlapping the box).
CellSet read_cells(const Reader& r, const json& j, const std::string& path, const TensorLevel& lv) {
  CellSet cells(lv);
  const int d = lv.dim();
  auto multi = [&](const json& v, const std::string& p, bool upper) {
    const std::vector<int> m = r.integers(v, p);
    if (static_cast<int>(m.size()) != d) r.fail(p, "expected " + std::to_string(d) + " indices");
    MultiIndex out;
    for (int i = 0; i < d; ++i) {
      const int e = lv.cell_extents()[static_cast<std::size_t>(i)];
      const int x = m[static_cast<std::size_t>(i)];
      if (x < 0 || x > e || (!upper && x == e))
        r.fail(p + "/" + std::to_string(i), "cell index " + std::to_string(x) + " out of range at level " +
                                                std::to_string(lv.level()) + " (" + std::to_string(e) + " cells)");
      out.push_back(x);
    }
    return out;
  };
  if (!j.is_object()) r.fail(path, "expected an object");
  if (const json* c = r.optional(j, "cells")) {
    const std::string cp = path + "/cells";
    for (std::size_t k = 0; k < r.array(*c, cp).size(); ++k)
      cells.insert(lv.cell_index(multi((*c)[k], cp + "/" + std::to_string(k), false)));
  }
  if (const json* c = r.optional(j, "ranges")) {
    const std::string cp = path + "/ranges";
    for (std::size_t k = 0; k < r.array(*c, cp).size(); ++k) {
      const std::string kp = cp + "/" + std::to_string(k);
      IndexRange range{multi(r.field((*c)[k], kp, "lo"), kp + "/lo", false), multi(r.field((*c)[k], kp, "hi"), kp + "/hi", true)};
      cells.insert(range);
    }
  }
  if (const json* c = r.optional(j, "boxes")) {
    const std::string cp = path + "/boxes";
    for (std::size_t k = 0; k < r.array(*c, cp).size(); ++k) {
      const std::string kp = cp + "/" + std::to_string(k);
      Box b{r.numbers(r.field((*c)[k], kp, "lo"), kp + "/lo"), r.numbers(r.field((*c)[k], kp, "hi"), kp + "/hi")};
      if (b.dim() != d || static_cast<int>(b.hi.size()) != d) r.fail(kp, "expected " + std::to_string(d) + " coordinates");
      for (int i = 0; i < d; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (!(0.0 <= b.lo[u] && b.lo[u] < b.hi[u] && b.hi[u] <= 1.0)) r.fail(kp, "box must satisfy 0 <= lo < hi <= 1");
      }
      cells.insert(lv.cells_overlapping(b));
    }
  }
  return cells;
}

/// Cell sets at levels 0, 1, ... from an array of entries; entry k must be
/// at level k.
std::vector<CellSet> read_cell_sets(const Reader& r, const json& arr, const std::string& path, const LevelSequence& levels) {
  std::vector<CellSet> out;
  for (std::size_t k = 0; k < r.array(arr, path).size(); ++k) {
    const std::string kp = path + "/" + std::to_string(k);
    const int lev = static_cast<int>(k);
    if (const json* l = r.optional(arr[k], "level"))
      if (r.integer(*l, kp + "/level") != lev) r.fail(kp + "/level", "entry " + std::to_string(k) + " must be at level " + std::to_string(lev));
    if (lev >= levels.depth()) r.fail(kp, "level " + std::to_string(lev) + " does not exist");
    out.push_back(read_cells(r, arr[k], kp, levels.level(lev)));
  }
  return out;
}

json cells_json(const TensorLevel& lv, const CellSet& cells, bool with_boxes) {
  json list = json::array(), boxes = json::array();
  for (const std::int64_t c : cells.members()) {
    const MultiIndex m = lv.cell_multi(c);
    list.push_back(std::vector<int>(m.begin(), m.end()));
    if (with_boxes) {
      const Box b = lv.cell_box(c);
      boxes.push_back(json{{"lo", b.lo}, {"hi", b.hi}});
    }
  }
  json out{{"level", lv.level()}, {"cells", list}};
  if (with_boxes) out["boxes"] = boxes;
  return out;
}

json header_json(const std::string& name, const SubdomainHierarchy& h, const char* schema) {
  const LevelSequence& levels = h.levels();
  const TensorLevel& l0 = levels.level(0);
  json degrees = json::array(), knots = json::array();
  for (int i = 0; i < l0.dim(); ++i) {
    degrees.push_back(l0.degree(i));
    knots.push_back(knot_vector_json(l0.direction(i)));
  }
  json doc{{"schema", schema}, {"name", name},       {"dimension", l0.dim()}, {"degrees", degrees},
           {"knots", knots},   {"depth", h.depth()}, {"levels", levels.depth()}};
  if (levels.dyadic()) {
    doc["refinement"] = "dyadic";
  } else {
    json ex = json::array();
    for (int l = 1; l < levels.depth(); ++l) {
      json lv = json::array();
      for (int i = 0; i < l0.dim(); ++i) lv.push_back(knot_vector_json(levels.level(l).direction(i)));
      ex.push_back(lv);
    }
    doc["refinement"] = json{{"explicit", ex}};
  }
  return doc;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("io", "cannot open file", path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Fixture parse_fixture(const std::string& text, const std::string& source) {
  const json doc = parse_document(text, source, kFixtureSchema);
  const Reader r(source);
  const int depth = r.integer(r.field(doc, "", "depth"), "/depth");
  Header hd = read_header(r, doc, depth);
  Fixture fx;
  fx.name = hd.name.empty() ? source : hd.name;

  std::vector<CellSet> subs;
  if (const json* s = r.optional(doc, "subdomains")) subs = read_cell_sets(r, *s, "/subdomains", *hd.levels);
  if (static_cast<int>(subs.size()) != depth - 1)
    r.fail("/subdomains", "expected " + std::to_string(depth - 1) + " subdomains for depth " + std::to_string(depth));
  try {
    fx.hierarchy = std::make_shared<const SubdomainHierarchy>(hd.levels, std::move(subs));
  } catch (const ValidationError& e) {
    throw ValidationError(e.kind(), e.message(), r.where("/subdomains") + ", " + e.where());
  }

  if (const json* e = r.optional(doc, "enlargement")) {
    if (static_cast<int>(r.array(*e, "/enlargement").size()) > depth) r.fail("/enlargement", "at most " + std::to_string(depth) + " entries");
    // A new deepest level may be needed for the last entry.
    std::shared_ptr<const LevelSequence> levels = hd.levels;
    if (static_cast<int>(e->size()) == depth && levels->depth() < depth + 1)
      levels = std::make_shared<const LevelSequence>(levels->extended(depth + 1));
    std::vector<CellSet> adds = read_cell_sets(r, *e, "/enlargement", *levels);
    try {
      (void)enlarge_hierarchy(*fx.hierarchy, adds);
    } catch (const ValidationError& err) {
      throw ValidationError(err.kind(), err.message(), r.where("/enlargement") + ", " + err.where());
    }
    fx.enlargement = std::move(adds);
  }
  return fx;
}

Fixture load_fixture(const std::filesystem::path& path) { return parse_fixture(read_text_file(path), path.string()); }

json fixture_json(const std::string& name, const SubdomainHierarchy& h, const std::vector<CellSet>* enlargement) {
  json doc = header_json(name, h, kFixtureSchema);
  json subs = json::array();
  for (int l = 1; l < h.depth(); ++l) subs.push_back(cells_json(h.level(l - 1), h.subdomain_cells(l), false));
  doc["subdomains"] = subs;
  if (enlargement) {
    json e = json::array();
    for (std::size_t k = 0; k < enlargement->size(); ++k) {
      const CellSet& c = (*enlargement)[k];
      // The level of a new deepest entry may lie beyond the sequence.
      json entry{{"level", static_cast<int>(k)}, {"cells", json::array()}};
      if (static_cast<int>(k) < h.levels().depth()) entry = cells_json(h.level(static_cast<int>(k)), c, false);
      e.push_back(entry);
    }
    doc["enlargement"] = e;
  }
  return doc;
}

json mesh_dump(const std::string& name, const SubdomainHierarchy& h) {
  json doc = header_json(name, h, kMeshSchema);
  const HierarchicalMesh mesh(h);
  json active = json::array();
  for (int l = 0; l < mesh.depth(); ++l) active.push_back(cells_json(h.level(l), mesh.active(l), true));
  doc["active"] = active;
  return doc;
}

std::shared_ptr<const SubdomainHierarchy> parse_mesh_dump(const std::string& text, const std::string& source) {
  const json doc = parse_document(text, source, kMeshSchema);
  const Reader r(source);
  const json& act = r.array(r.field(doc, "", "active"), "/active");
  const int depth = static_cast<int>(act.size());
  if (const json* dj = r.optional(doc, "depth"))
    if (r.integer(*dj, "/depth") != depth) r.fail("/depth", "depth does not match the active cell levels");
  const Header hd = read_header(r, doc, depth);
  const std::vector<CellSet> active = read_cell_sets(r, act, "/active", *hd.levels);
  try {
    return std::make_shared<const SubdomainHierarchy>(hierarchy_from_mesh(hd.levels, active));
  } catch (const ValidationError& e) {
    throw ValidationError(e.kind(), e.message(), r.where("/active") + ", " + e.where());
  }
}

}  // namespace hbs
