#ifndef VNFSWARM_SCENARIO_HPP_
#define VNFSWARM_SCENARIO_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vnfswarm/model.hpp"

namespace vnfswarm {

/// Parameters of one randomly generated experiment instance.
struct ScenarioSpec {
  int servers = 16;
  double avg_degree = 3.0;
  int demand_count = 30;
  int chain_min = 1;
  int chain_max = 9;
  /// Upper limit accepted for chain_max.
  int chain_cap = 9;
  int vnf_types = 6;
  double vnf_capacity = 100.0;
  double vnf_bandwidth = 1.0;
  double server_capacity = 400.0;
  double link_bandwidth = 200.0;
  double delay_min = 1.0;
  double delay_max = 10.0;
  /// Path delay bound written into the instance config; <= 0 selects
  /// (chain_max + 1) * delay diameter, which no stitched path can exceed.
  double dp_max = 0.0;
  bool clone_demands = false;
  std::uint64_t seed = 1;

  bool operator==(const ScenarioSpec&) const = default;
};

/// Returns one message per broken invariant.
std::vector<std::string> validate_spec(const ScenarioSpec& spec);

/// Connected random topology (uniform spanning tree plus uniform extra
/// edges), homogeneous capacities and random demands. Deterministic in
/// spec.seed. Throws InvalidInput for an invalid spec.
Instance generate(const ScenarioSpec& spec);

/// One sweep dimension. Recognized names: servers, demands, chain (sets
/// chain_min = chain_max), chain_min, chain_max, vnf_capacity,
/// server_capacity, link_bandwidth, avg_degree, requested (total requested
/// VNFs; demand_count = round(requested / mean chain length)).
struct SweepAxis {
  std::string name;
  std::vector<double> values;
};

/// Parses `name:a..b` (integer range), `name:a..b:step` or `name:v1,v2,...`.
SweepAxis parse_sweep(const std::string& text);

/// Cartesian product of the axes over the template, first axis outermost.
/// Grid point i gets seed template.seed + i. No axes yields the template.
std::vector<ScenarioSpec> grid(const ScenarioSpec& base, const std::vector<SweepAxis>& sweep);

/// Applies one axis value to a spec.
void apply_axis(ScenarioSpec& spec, const std::string& name, double value);

/// Short identifier such as `n16-d30-c1_9-cap100-s7`.
std::string scenario_id(const ScenarioSpec& spec);

}  // namespace vnfswarm

#endif  // VNFSWARM_SCENARIO_HPP_
