#include "vnfswarm/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

namespace vnfswarm {
namespace {

void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  if (!obj.is_object()) throw FormatError(where + " must be a JSON object");
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& item : obj.items()) {
    if (!keys.contains(item.key())) {
      throw FormatError("unknown key '" + item.key() + "' in " + where);
    }
  }
}

const Json& required(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError("missing key '" + std::string(key) + "' in " + where);
  return *it;
}

template <typename T>
T get(const Json& obj, const char* key, const std::string& where) {
  try {
    return required(obj, key, where).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

template <typename T>
void overlay(const Json& obj, const char* key, T& field, const std::string& where) {
  if (obj.contains(key)) field = get<T>(obj, key, where);
}

}  // namespace

Json to_json(const SolverConfig& c) {
  return Json{{"particles", c.particles},
              {"iterations", c.iterations},
              {"w1", c.w1},
              {"w2", c.w2},
              {"w3", c.w3},
              {"c1", c.c1},
              {"c2", c.c2},
              {"inertia_start", c.inertia_start},
              {"inertia_end", c.inertia_end},
              {"dp_max", c.dp_max},
              {"seed", c.seed},
              {"penalty_weight", c.penalty_weight},
              {"v_max_fraction", c.v_max_fraction}};
}

SolverConfig config_from_json(const Json& doc, SolverConfig c) {
  const std::string where = "config";
  reject_unknown(doc,
                 {"particles", "iterations", "w1", "w2", "w3", "c1", "c2", "inertia_start",
                  "inertia_end", "dp_max", "seed", "penalty_weight", "v_max_fraction"},
                 where);
  overlay(doc, "particles", c.particles, where);
  overlay(doc, "iterations", c.iterations, where);
  overlay(doc, "w1", c.w1, where);
  overlay(doc, "w2", c.w2, where);
  overlay(doc, "w3", c.w3, where);
  overlay(doc, "c1", c.c1, where);
  overlay(doc, "c2", c.c2, where);
  overlay(doc, "inertia_start", c.inertia_start, where);
  overlay(doc, "inertia_end", c.inertia_end, where);
  overlay(doc, "dp_max", c.dp_max, where);
  overlay(doc, "seed", c.seed, where);
  overlay(doc, "penalty_weight", c.penalty_weight, where);
  overlay(doc, "v_max_fraction", c.v_max_fraction, where);
  return c;
}

Json to_json(const Instance& instance) {
  Json servers = Json::array();
  for (const auto& s : instance.topology.servers) {
    servers.push_back({{"id", s.id}, {"capacity", s.capacity}});
  }
  Json links = Json::array();
  for (const auto& l : instance.topology.links) {
    links.push_back({{"id", l.id},
                     {"endpoints", {l.endpoints[0], l.endpoints[1]}},
                     {"bandwidth", l.bandwidth},
                     {"delay", l.delay}});
  }
  Json types = Json::array();
  for (const auto& t : instance.catalog.types) {
    types.push_back({{"id", t.id}, {"capacity", t.capacity}, {"bandwidth", t.bandwidth}});
  }
  Json demands = Json::array();
  for (const auto& d : instance.demands) {
    demands.push_back({{"id", d.id},
                       {"source", d.source},
                       {"destination", d.destination},
                       {"chain", d.chain}});
  }
  return Json{{"topology",
               {{"name", instance.topology.name}, {"servers", servers}, {"links", links}}},
              {"catalog", {{"types", types}}},
              {"demands", demands},
              {"config", to_json(instance.config)}};
}

Instance instance_from_json(const Json& doc) {
  reject_unknown(doc, {"topology", "catalog", "demands", "config"}, "instance");
  Instance instance;

  const auto& topo = required(doc, "topology", "instance");
  reject_unknown(topo, {"name", "servers", "links"}, "topology");
  if (topo.contains("name")) instance.topology.name = get<std::string>(topo, "name", "topology");
  for (const auto& s : required(topo, "servers", "topology")) {
    reject_unknown(s, {"id", "capacity"}, "server");
    instance.topology.servers.push_back(
        {get<ServerId>(s, "id", "server"), get<double>(s, "capacity", "server")});
  }
  for (const auto& l : required(topo, "links", "topology")) {
    reject_unknown(l, {"id", "endpoints", "bandwidth", "delay"}, "link");
    const auto ends = get<std::vector<ServerId>>(l, "endpoints", "link");
    if (ends.size() != 2) throw FormatError("link endpoints must have exactly two entries");
    instance.topology.links.push_back({get<LinkId>(l, "id", "link"),
                                       {ends[0], ends[1]},
                                       get<double>(l, "bandwidth", "link"),
                                       get<double>(l, "delay", "link")});
  }

  const auto& catalog = required(doc, "catalog", "instance");
  reject_unknown(catalog, {"types"}, "catalog");
  for (const auto& t : required(catalog, "types", "catalog")) {
    reject_unknown(t, {"id", "capacity", "bandwidth"}, "vnf type");
    instance.catalog.types.push_back({get<VnfTypeId>(t, "id", "vnf type"),
                                      get<double>(t, "capacity", "vnf type"),
                                      get<double>(t, "bandwidth", "vnf type")});
  }

  for (const auto& d : required(doc, "demands", "instance")) {
    reject_unknown(d, {"id", "source", "destination", "chain"}, "demand");
    instance.demands.push_back({get<DemandId>(d, "id", "demand"),
                                get<ServerId>(d, "source", "demand"),
                                get<ServerId>(d, "destination", "demand"),
                                get<std::vector<VnfTypeId>>(d, "chain", "demand")});
  }

  if (doc.contains("config")) instance.config = config_from_json(doc["config"]);
  return instance;
}

Json to_json(const ScenarioSpec& s) {
  return Json{{"servers", s.servers},
              {"avg_degree", s.avg_degree},
              {"demand_count", s.demand_count},
              {"chain_min", s.chain_min},
              {"chain_max", s.chain_max},
              {"chain_cap", s.chain_cap},
              {"vnf_types", s.vnf_types},
              {"vnf_capacity", s.vnf_capacity},
              {"vnf_bandwidth", s.vnf_bandwidth},
              {"server_capacity", s.server_capacity},
              {"link_bandwidth", s.link_bandwidth},
              {"delay_range", {s.delay_min, s.delay_max}},
              {"dp_max", s.dp_max},
              {"clone_demands", s.clone_demands},
              {"seed", s.seed}};
}

ScenarioSpec scenario_from_json(const Json& doc, ScenarioSpec s) {
  const std::string where = "scenario spec";
  reject_unknown(doc,
                 {"servers", "avg_degree", "demand_count", "chain_min", "chain_max", "chain_cap",
                  "vnf_types", "vnf_capacity", "vnf_bandwidth", "server_capacity",
                  "link_bandwidth", "delay_range", "dp_max", "clone_demands", "seed"},
                 where);
  overlay(doc, "servers", s.servers, where);
  overlay(doc, "avg_degree", s.avg_degree, where);
  overlay(doc, "demand_count", s.demand_count, where);
  overlay(doc, "chain_min", s.chain_min, where);
  overlay(doc, "chain_max", s.chain_max, where);
  overlay(doc, "chain_cap", s.chain_cap, where);
  overlay(doc, "vnf_types", s.vnf_types, where);
  overlay(doc, "vnf_capacity", s.vnf_capacity, where);
  overlay(doc, "vnf_bandwidth", s.vnf_bandwidth, where);
  overlay(doc, "server_capacity", s.server_capacity, where);
  overlay(doc, "link_bandwidth", s.link_bandwidth, where);
  overlay(doc, "dp_max", s.dp_max, where);
  overlay(doc, "clone_demands", s.clone_demands, where);
  overlay(doc, "seed", s.seed, where);
  if (doc.contains("delay_range")) {
    const auto range = get<std::vector<double>>(doc, "delay_range", where);
    if (range.size() != 2) throw FormatError("delay_range must be [min, max]");
    s.delay_min = range[0];
    s.delay_max = range[1];
  }
  return s;
}

Json to_json(const Placement& placement) {
  Json hosts = Json::array();
  Json paths = Json::array();
  for (std::size_t k = 0; k < placement.demand_ids.size(); ++k) {
    hosts.push_back({{"demand", placement.demand_ids[k]}, {"hosts", placement.hosts[k]}});
    const auto& p = placement.paths[k];
    paths.push_back(
        {{"demand", p.demand}, {"nodes", p.nodes}, {"links", p.links}, {"delay", p.delay}});
  }
  Json instances = Json::array();
  for (const auto& inst : placement.instances) {
    instances.push_back({{"type", inst.type}, {"server", inst.server}});
  }
  return Json{{"hosts", hosts},
              {"paths", paths},
              {"instances", instances},
              {"used_servers", placement.used_servers}};
}

Json to_json(const FitnessReport& r) {
  return Json{{"objective", r.objective},
              {"T", r.used_servers},
              {"U", r.utilization},
              {"dp_hat", r.avg_delay},
              {"penalty", r.penalty},
              {"penalized_fitness", r.penalized_fitness},
              {"feasible", r.feasible},
              {"violations",
               {{"server_excess", r.violations.server_excess},
                {"link_excess", r.violations.link_excess},
                {"path_excess", r.violations.path_excess}}}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  try {
    return instance_from_json(read_json_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

Json to_json(const Manifest& manifest) {
  Json entries = Json::array();
  for (const auto& e : manifest.entries) {
    entries.push_back({{"id", e.id}, {"file", e.file}, {"spec", to_json(e.spec)}});
  }
  return Json{{"instances", entries}};
}

Manifest manifest_from_json(const Json& doc) {
  reject_unknown(doc, {"instances"}, "manifest");
  Manifest manifest;
  for (const auto& e : required(doc, "instances", "manifest")) {
    reject_unknown(e, {"id", "file", "spec"}, "manifest entry");
    ManifestEntry entry;
    entry.id = get<std::string>(e, "id", "manifest entry");
    entry.file = get<std::string>(e, "file", "manifest entry");
    if (e.contains("spec")) entry.spec = scenario_from_json(e["spec"]);
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

Manifest load_manifest(const std::filesystem::path& path) {
  return manifest_from_json(read_json_file(path));
}

}  // namespace vnfswarm
