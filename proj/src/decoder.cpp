#include "vnfswarm/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace vnfswarm {
namespace {

std::size_t index_of(const std::vector<DemandId>& ids, DemandId demand) {
  const auto it = std::find(ids.begin(), ids.end(), demand);
  if (it == ids.end()) {
    throw InvalidInput("placement has no demand " + std::to_string(demand));
  }
  return static_cast<std::size_t>(it - ids.begin());
}

void finish_sets(Placement& placement) {
  std::sort(placement.instances.begin(), placement.instances.end());
  placement.instances.erase(std::unique(placement.instances.begin(), placement.instances.end()),
                            placement.instances.end());
  placement.used_servers.clear();
  for (const auto& inst : placement.instances) placement.used_servers.push_back(inst.server);
  std::sort(placement.used_servers.begin(), placement.used_servers.end());
  placement.used_servers.erase(
      std::unique(placement.used_servers.begin(), placement.used_servers.end()),
      placement.used_servers.end());
}

void check_position(std::span<const double> position, std::size_t expected) {
  if (position.size() != expected) {
    throw InvalidInput("position has " + std::to_string(position.size()) +
                       " coordinates, expected " + std::to_string(expected));
  }
}

}  // namespace

std::span<const ServerId> Placement::hosts_of(DemandId demand) const {
  return hosts[index_of(demand_ids, demand)];
}

const Path& Placement::path_of(DemandId demand) const {
  return paths[index_of(demand_ids, demand)];
}

std::size_t dimension(std::span<const Demand> demands) {
  std::size_t total = 0;
  for (const auto& d : demands) total += d.chain.size();
  return total;
}

ServerId coordinate_to_server(double coordinate, std::size_t server_count) {
  const auto top = static_cast<double>(server_count);
  // NaN falls through to server 0.
  if (!(coordinate > 0.0)) return 0;
  if (coordinate >= top) return static_cast<ServerId>(server_count - 1);
  return static_cast<ServerId>(std::floor(coordinate));
}

Placement place_hosts(std::span<const ServerId> flat_hosts, const Problem& problem) {
  if (flat_hosts.size() != problem.dimension()) {
    throw InvalidInput("host vector has " + std::to_string(flat_hosts.size()) +
                       " entries, expected " + std::to_string(problem.dimension()));
  }
  const auto n = static_cast<ServerId>(problem.server_count());
  Placement placement;
  const auto count = problem.demand_count();
  placement.demand_ids.reserve(count);
  placement.hosts.reserve(count);
  placement.paths.resize(count);
  placement.instances.reserve(flat_hosts.size());
  const auto& types = problem.catalog().types;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& demand = problem.demand(k);
    const auto begin = flat_hosts.begin() + static_cast<std::ptrdiff_t>(problem.offset(k));
    std::vector<ServerId> hosts(begin, begin + static_cast<std::ptrdiff_t>(demand.chain.size()));
    for (std::size_t j = 0; j < hosts.size(); ++j) {
      if (hosts[j] < 0 || hosts[j] >= n) {
        throw InvalidInput("host " + std::to_string(hosts[j]) + " is not a server");
      }
      placement.instances.push_back({types[problem.chain_types(k)[j]].id, hosts[j]});
    }
    stitch_path_into(problem.routes(), demand, hosts, placement.paths[k]);
    placement.demand_ids.push_back(demand.id);
    placement.hosts.push_back(std::move(hosts));
  }
  finish_sets(placement);
  return placement;
}

Placement decode(std::span<const double> position, const Problem& problem) {
  check_position(position, problem.dimension());
  std::vector<ServerId> flat(position.size());
  const auto n = problem.server_count();
  std::transform(position.begin(), position.end(), flat.begin(),
                 [n](double x) { return coordinate_to_server(x, n); });
  return place_hosts(flat, problem);
}

Placement decode(std::span<const double> position, const Topology& topology,
                 std::span<const Demand> demands) {
  check_position(position, dimension(demands));
  // Catalog lookups are not needed for hosts and paths; the instance set keeps
  // the chain's type ids as given.
  std::vector<std::size_t> order(demands.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return demands[a].id < demands[b].id; });
  const RoutingTable routes(topology);
  const auto n = topology.servers.size();
  Placement placement;
  std::size_t at = 0;
  for (const auto idx : order) {
    const auto& demand = demands[idx];
    std::vector<ServerId> hosts;
    for (const auto type : demand.chain) {
      const auto host = coordinate_to_server(position[at++], n);
      hosts.push_back(host);
      placement.instances.push_back({type, host});
    }
    placement.paths.push_back(stitch_path(routes, demand, hosts));
    placement.demand_ids.push_back(demand.id);
    placement.hosts.push_back(std::move(hosts));
  }
  finish_sets(placement);
  return placement;
}

}  // namespace vnfswarm
