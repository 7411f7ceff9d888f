#ifndef VNFSWARM_IO_HPP_
#define VNFSWARM_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "vnfswarm/evaluation.hpp"
#include "vnfswarm/model.hpp"
#include "vnfswarm/pso.hpp"
#include "vnfswarm/scenario.hpp"

namespace vnfswarm {

using Json = nlohmann::ordered_json;

/// Raised for malformed files: bad JSON, missing or unknown keys, wrong types.
class FormatError : public Error {
 public:
  using Error::Error;
};

Json to_json(const Instance& instance);
Json to_json(const SolverConfig& config);
Json to_json(const ScenarioSpec& spec);
Json to_json(const Placement& placement);
Json to_json(const FitnessReport& report);

/// Parses an instance document with keys topology, catalog, demands and
/// optional config. Unknown keys are rejected. Missing config entries take
/// the built-in defaults.
Instance instance_from_json(const Json& doc);
/// Overlays the keys present in `doc` on `base`.
SolverConfig config_from_json(const Json& doc, SolverConfig base = {});
ScenarioSpec scenario_from_json(const Json& doc, ScenarioSpec base = {});

Json read_json_file(const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

/// Pretty-printed JSON text terminated by a newline.
std::string dump(const Json& doc);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// One generated instance listed in a sweep manifest.
struct ManifestEntry {
  std::string id;
  std::string file;  // relative to the manifest's directory
  ScenarioSpec spec;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
};

Json to_json(const Manifest& manifest);
Manifest manifest_from_json(const Json& doc);
Manifest load_manifest(const std::filesystem::path& path);

}  // namespace vnfswarm

#endif  // VNFSWARM_IO_HPP_
