#ifndef VNFSWARM_TESTS_FIXTURES_HPP_
#define VNFSWARM_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "vnfswarm/model.hpp"
#include "vnfswarm/scenario.hpp"

namespace vnfswarm::testing {

// Five-node example: servers A..E are 0..4, links A-C, C-D, C-B, B-E with
// unit delay. SC1 goes A -> D through F1, F2; SC2 goes A -> E through F1, F3.
inline constexpr ServerId A = 0, B = 1, C = 2, D = 3, E = 4;
inline constexpr VnfTypeId F1 = 1, F2 = 2, F3 = 3;

struct FiveNodeOptions {
  double server_capacity = 2.0;
  double link_bandwidth = 4.0;
  double vnf_capacity = 1.0;
  double vnf_bandwidth = 1.0;
  double dp_max = 3.0;
};

inline Instance five_node_instance(FiveNodeOptions o = {}) {
  Instance inst;
  inst.topology.name = "five-node";
  for (ServerId s = 0; s < 5; ++s) inst.topology.servers.push_back({s, o.server_capacity});
  inst.topology.links = {{0, {A, C}, o.link_bandwidth, 1.0},
                         {1, {C, D}, o.link_bandwidth, 1.0},
                         {2, {C, B}, o.link_bandwidth, 1.0},
                         {3, {B, E}, o.link_bandwidth, 1.0}};
  for (const auto t : {F1, F2, F3}) {
    inst.catalog.types.push_back({t, o.vnf_capacity, o.vnf_bandwidth});
  }
  inst.demands = {{0, A, D, {F1, F2}}, {1, A, E, {F1, F3}}};
  inst.config.dp_max = o.dp_max;
  return inst;
}

// Independent all-pairs delays (Floyd-Warshall), used as an oracle for the
// Dijkstra-based routing table.
inline std::vector<std::vector<double>> floyd_warshall(const Topology& t) {
  const auto n = t.servers.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
  for (const auto& l : t.links) {
    const auto a = static_cast<std::size_t>(l.endpoints[0]);
    const auto b = static_cast<std::size_t>(l.endpoints[1]);
    d[a][b] = std::min(d[a][b], l.delay);
    d[b][a] = std::min(d[b][a], l.delay);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// Small random instance in the oracle-enumerable range.
inline Instance tiny_instance(std::uint64_t seed) {
  ScenarioSpec spec;
  spec.seed = seed;
  spec.servers = 2 + static_cast<int>(seed % 3);  // 2..4
  spec.avg_degree = spec.servers == 2 ? 1.0 : 2.0;
  spec.demand_count = 1 + static_cast<int>((seed / 3) % 2);
  spec.chain_min = 1;
  spec.chain_max = 2;
  spec.vnf_types = 3;
  spec.vnf_capacity = 1.0;
  spec.server_capacity = 1.0 + static_cast<double>((seed / 6) % 3);  // 1..3 types per server
  spec.link_bandwidth = 2.0 + static_cast<double>(seed % 4);
  spec.delay_min = 1.0;
  spec.delay_max = 5.0;
  return generate(spec);
}

}  // namespace vnfswarm::testing

#endif  // VNFSWARM_TESTS_FIXTURES_HPP_
