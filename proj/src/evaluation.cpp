#include "vnfswarm/evaluation.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace vnfswarm {
namespace {

const VnfTypeSpec& lookup(const VnfCatalog& catalog, VnfTypeId id) {
  const auto* type = catalog.find(id);
  if (type == nullptr) throw InvalidInput("unknown vnf type " + std::to_string(id));
  return *type;
}

const Demand& demand_by_id(std::span<const Demand> demands, DemandId id) {
  for (const auto& d : demands) {
    if (d.id == id) return d;
  }
  throw InvalidInput("unknown demand " + std::to_string(id));
}

double excess(double used, double bound) { return used > bound ? used - bound : 0.0; }

// Loads given the per-path bandwidth of each demand.
std::vector<double> accumulate_loads(std::span<const Path> paths,
                                     std::span<const double> path_bandwidth,
                                     std::size_t link_count) {
  std::vector<double> loads(link_count, 0.0);
  for (std::size_t k = 0; k < paths.size(); ++k) {
    for (const auto link : paths[k].links) {
      loads[static_cast<std::size_t>(link)] += path_bandwidth[k];
    }
  }
  return loads;
}

Violations violations_from(std::span<const double> usage, std::span<const double> loads,
                           std::span<const Path> paths, const Topology& topology,
                           double dp_max) {
  Violations v;
  v.server_excess.reserve(usage.size());
  for (std::size_t n = 0; n < usage.size(); ++n) {
    v.server_excess.push_back(excess(usage[n], topology.servers[n].capacity));
  }
  v.link_excess.reserve(loads.size());
  for (std::size_t l = 0; l < loads.size(); ++l) {
    v.link_excess.push_back(excess(loads[l], topology.links[l].bandwidth));
  }
  v.path_excess.reserve(paths.size());
  for (const auto& p : paths) v.path_excess.push_back(excess(p.delay, dp_max));
  return v;
}

}  // namespace

bool Violations::any() const {
  auto positive = [](double x) { return x > 0.0; };
  return std::any_of(server_excess.begin(), server_excess.end(), positive) ||
         std::any_of(link_excess.begin(), link_excess.end(), positive) ||
         std::any_of(path_excess.begin(), path_excess.end(), positive);
}

double Violations::total() const {
  double sum = 0.0;
  for (const auto x : server_excess) sum += x;
  for (const auto x : link_excess) sum += x;
  for (const auto x : path_excess) sum += x;
  return sum;
}

double avg_path_delay(std::span<const Path> paths) {
  if (paths.empty()) throw InvalidInput("average path delay of an empty path set");
  double sum = 0.0;
  for (const auto& p : paths) sum += p.delay;
  return sum / static_cast<double>(paths.size());
}

std::vector<double> link_loads(const Placement& placement, const Topology& topology,
                               const VnfCatalog& catalog, std::span<const Demand> demands) {
  std::vector<double> bandwidth;
  bandwidth.reserve(placement.paths.size());
  for (const auto& path : placement.paths) {
    const auto& demand = demand_by_id(demands, path.demand);
    const std::set<VnfTypeId> distinct(demand.chain.begin(), demand.chain.end());
    double bw = 0.0;
    for (const auto type : distinct) bw += lookup(catalog, type).bandwidth;
    bandwidth.push_back(bw);
  }
  return accumulate_loads(placement.paths, bandwidth, topology.links.size());
}

double avg_link_utilization(std::span<const double> loads, const Topology& topology) {
  if (topology.links.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t l = 0; l < topology.links.size(); ++l) {
    sum += loads[l] / topology.links[l].bandwidth;
  }
  return sum / static_cast<double>(topology.links.size());
}

std::vector<double> server_usage(const Placement& placement, const Topology& topology,
                                 const VnfCatalog& catalog) {
  std::vector<double> usage(topology.servers.size(), 0.0);
  for (const auto& inst : placement.instances) {
    usage[static_cast<std::size_t>(inst.server)] += lookup(catalog, inst.type).capacity;
  }
  return usage;
}

Violations check_constraints(const Placement& placement, const Topology& topology,
                             const VnfCatalog& catalog, std::span<const Demand> demands,
                             double dp_max) {
  const auto usage = server_usage(placement, topology, catalog);
  const auto loads = link_loads(placement, topology, catalog, demands);
  return violations_from(usage, loads, placement.paths, topology, dp_max);
}

double objective(int used_servers, double utilization, double avg_delay,
                 const SolverConfig& config, std::size_t server_count, double dp_max) {
  if (server_count == 0) throw InvalidInput("objective needs at least one server");
  if (!(dp_max > 0.0)) throw InvalidInput("objective needs dp_max > 0");
  return config.w1 * (static_cast<double>(used_servers) / static_cast<double>(server_count)) +
         config.w2 * utilization + config.w3 * (avg_delay / dp_max);
}

FitnessReport evaluate(const Placement& placement, const Problem& problem,
                       const SolverConfig& config) {
  const auto& topology = problem.topology();
  std::vector<double> bandwidth(problem.demand_count());
  for (std::size_t k = 0; k < bandwidth.size(); ++k) bandwidth[k] = problem.chain_bandwidth(k);
  const auto loads = accumulate_loads(placement.paths, bandwidth, problem.link_count());
  const auto usage = server_usage(placement, topology, problem.catalog());

  FitnessReport report;
  report.used_servers = static_cast<int>(placement.used_servers.size());
  report.utilization = avg_link_utilization(loads, topology);
  report.avg_delay = placement.paths.empty() ? 0.0 : avg_path_delay(placement.paths);
  report.objective = objective(report.used_servers, report.utilization, report.avg_delay,
                               config, problem.server_count(), config.dp_max);
  report.violations = violations_from(usage, loads, placement.paths, topology, config.dp_max);

  double normalized = 0.0;
  const auto& v = report.violations;
  for (std::size_t n = 0; n < v.server_excess.size(); ++n) {
    normalized += v.server_excess[n] / topology.servers[n].capacity;
  }
  for (std::size_t l = 0; l < v.link_excess.size(); ++l) {
    normalized += v.link_excess[l] / topology.links[l].bandwidth;
  }
  for (const auto x : v.path_excess) normalized += x / config.dp_max;

  report.feasible = !v.any();
  report.penalty = config.penalty_weight * normalized;
  report.penalized_fitness = report.objective + report.penalty;
  return report;
}

FitnessReport fitness(std::span<const double> position, const Problem& problem,
                      const SolverConfig& config) {
  return evaluate(decode(position, problem), problem, config);
}

}  // namespace vnfswarm
