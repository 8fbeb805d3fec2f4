#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hbs/hierarchy/subdomain_hierarchy.hpp"

namespace hbs {

inline constexpr const char* kFixtureSchema = "hbs-fixture/1";
inline constexpr const char* kMeshSchema = "hbs-mesh/1";

/// A parsed hierarchy file. `enlargement[k]`, when present, is a cell set
/// of level k added to Omega_{k+1}.
struct Fixture {
  std::string name;
  std::shared_ptr<const SubdomainHierarchy> hierarchy;
  std::optional<std::vector<CellSet>> enlargement;
};

/// Parses a fixture document. Malformed input raises ValidationError with
/// kind "fixture" (or the kind of the failing construction, such as
/// "hierarchy nesting") and a location "<source>:<line>:<column>" for
/// syntax errors or "<source>: <json pointer>" for field errors.
Fixture parse_fixture(const std::string& text, const std::string& source = "<input>");
Fixture load_fixture(const std::filesystem::path& path);

/// The fixture document of a hierarchy; subdomains are written as cell
/// lists.
nlohmann::json fixture_json(const std::string& name, const SubdomainHierarchy& h,
                            const std::vector<CellSet>* enlargement = nullptr);

/// Active cells per level with their coordinate boxes, plus the level
/// data needed to rebuild the hierarchy.
nlohmann::json mesh_dump(const std::string& name, const SubdomainHierarchy& h);
/// Rebuilds the hierarchy from a mesh dump using the active cells only.
std::shared_ptr<const SubdomainHierarchy> parse_mesh_dump(const std::string& text, const std::string& source = "<input>");

/// Reads a whole file; throws ValidationError("io") on failure.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace hbs
