#include "vnfswarm/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "vnfswarm/format.hpp"
#include "vnfswarm/random.hpp"
#include "vnfswarm/routing.hpp"

namespace vnfswarm {
namespace {

using Edge = std::pair<ServerId, ServerId>;

Edge ordered(ServerId a, ServerId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Uniform labelled tree from a random Pruefer sequence.
std::vector<Edge> random_tree(int n, Rng& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<ServerId> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<ServerId>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (const auto c : code) ++degree[static_cast<std::size_t>(c)];
  std::priority_queue<ServerId, std::vector<ServerId>, std::greater<>> leaves;
  for (ServerId v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  for (const auto c : code) {
    const auto leaf = leaves.top();
    leaves.pop();
    edges.push_back(ordered(leaf, c));
    if (--degree[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const auto a = leaves.top();
  leaves.pop();
  edges.push_back(ordered(a, leaves.top()));
  return edges;
}

std::size_t target_edges(const ScenarioSpec& spec) {
  const auto n = static_cast<double>(spec.servers);
  const auto wanted = static_cast<std::size_t>(std::llround(spec.avg_degree * n / 2.0));
  const auto tree = static_cast<std::size_t>(std::max(0, spec.servers - 1));
  const auto complete = static_cast<std::size_t>(spec.servers) *
                        static_cast<std::size_t>(std::max(0, spec.servers - 1)) / 2;
  return std::min(std::max(wanted, tree), complete);
}

std::vector<VnfTypeId> random_chain(const ScenarioSpec& spec, Rng& rng) {
  const auto span = static_cast<std::uint64_t>(spec.chain_max - spec.chain_min + 1);
  const auto length = spec.chain_min + static_cast<int>(rng.below(span));
  std::vector<VnfTypeId> chain(static_cast<std::size_t>(length));
  for (auto& t : chain) {
    t = static_cast<VnfTypeId>(1 + rng.below(static_cast<std::uint64_t>(spec.vnf_types)));
  }
  return chain;
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

std::vector<std::string> validate_spec(const ScenarioSpec& spec) {
  std::vector<std::string> errors;
  if (spec.servers < 1) errors.emplace_back("servers must be >= 1");
  if (spec.demand_count < 0) errors.emplace_back("demand_count must be >= 0");
  if (spec.demand_count > 0 && spec.servers < 2) {
    errors.emplace_back("demands need at least 2 servers (distinct source and destination)");
  }
  if (spec.chain_min < 1 || spec.chain_min > spec.chain_max || spec.chain_max > spec.chain_cap) {
    errors.emplace_back("chain bounds must satisfy 1 <= chain_min <= chain_max <= " +
                        std::to_string(spec.chain_cap));
  }
  if (spec.vnf_types < 1) errors.emplace_back("vnf_types must be >= 1");
  if (!positive(spec.vnf_capacity)) errors.emplace_back("vnf_capacity must be > 0");
  if (!positive(spec.vnf_bandwidth)) errors.emplace_back("vnf_bandwidth must be > 0");
  if (!positive(spec.server_capacity)) errors.emplace_back("server_capacity must be > 0");
  if (!positive(spec.link_bandwidth)) errors.emplace_back("link_bandwidth must be > 0");
  if (!positive(spec.delay_min) || !std::isfinite(spec.delay_max) ||
      spec.delay_max < spec.delay_min) {
    errors.emplace_back("delay range must satisfy 0 < delay_min <= delay_max");
  }
  if (!positive(spec.avg_degree)) {
    errors.emplace_back("avg_degree must be > 0");
  } else if (spec.servers >= 1 && spec.avg_degree > spec.servers - 1 && spec.servers > 1) {
    errors.emplace_back("avg_degree exceeds the complete-graph degree " +
                        std::to_string(spec.servers - 1));
  }
  if (!std::isfinite(spec.dp_max)) errors.emplace_back("dp_max must be finite");
  return errors;
}

Instance generate(const ScenarioSpec& spec) {
  if (const auto errors = validate_spec(spec); !errors.empty()) {
    std::string msg = "invalid scenario spec:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw InvalidInput(msg);
  }
  Rng rng(spec.seed);
  Instance instance;
  auto& topo = instance.topology;
  topo.name = scenario_id(spec);
  for (ServerId s = 0; s < spec.servers; ++s) topo.servers.push_back({s, spec.server_capacity});

  auto edges = random_tree(spec.servers, rng);
  std::set<Edge> present(edges.begin(), edges.end());
  const auto wanted = target_edges(spec);
  const auto n = static_cast<std::uint64_t>(spec.servers);
  while (edges.size() < wanted) {
    const auto a = static_cast<ServerId>(rng.below(n));
    const auto b = static_cast<ServerId>(rng.below(n));
    if (a == b) continue;
    const auto e = ordered(a, b);
    if (present.insert(e).second) edges.push_back(e);
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const double delay = spec.delay_min == spec.delay_max
                             ? spec.delay_min
                             : rng.uniform(spec.delay_min, spec.delay_max);
    topo.links.push_back({static_cast<LinkId>(i),
                          {edges[i].first, edges[i].second},
                          spec.link_bandwidth,
                          delay});
  }

  for (int t = 1; t <= spec.vnf_types; ++t) {
    instance.catalog.types.push_back({t, spec.vnf_capacity, spec.vnf_bandwidth});
  }

  // Endpoints come before chains so that specs differing only in chain
  // parameters share topology and endpoints under one seed.
  for (int d = 0; d < spec.demand_count; ++d) {
    Demand demand;
    demand.id = d;
    demand.source = static_cast<ServerId>(rng.below(n));
    auto dst = static_cast<ServerId>(rng.below(n - 1));
    if (dst >= demand.source) ++dst;
    demand.destination = dst;
    instance.demands.push_back(std::move(demand));
  }
  std::vector<VnfTypeId> shared_chain;
  if (spec.clone_demands && spec.demand_count > 0) shared_chain = random_chain(spec, rng);
  for (auto& demand : instance.demands) {
    demand.chain = spec.clone_demands ? shared_chain : random_chain(spec, rng);
  }

  instance.config.seed = spec.seed;
  if (spec.dp_max > 0.0) {
    instance.config.dp_max = spec.dp_max;
  } else {
    const double diameter = RoutingTable(topo).diameter();
    instance.config.dp_max = std::max(static_cast<double>(spec.chain_max + 1) * diameter,
                                      spec.delay_max);
  }
  return instance;
}

void apply_axis(ScenarioSpec& spec, const std::string& name, double value) {
  const auto as_int = static_cast<int>(std::llround(value));
  if (name == "servers") {
    spec.servers = as_int;
  } else if (name == "demands") {
    spec.demand_count = as_int;
  } else if (name == "chain") {
    spec.chain_min = as_int;
    spec.chain_max = as_int;
  } else if (name == "chain_min") {
    spec.chain_min = as_int;
  } else if (name == "chain_max") {
    spec.chain_max = as_int;
  } else if (name == "vnf_capacity" || name == "capacity") {
    spec.vnf_capacity = value;
  } else if (name == "server_capacity") {
    spec.server_capacity = value;
  } else if (name == "link_bandwidth") {
    spec.link_bandwidth = value;
  } else if (name == "avg_degree") {
    spec.avg_degree = value;
  } else if (name == "requested") {
    const double mean_chain = (spec.chain_min + spec.chain_max) / 2.0;
    spec.demand_count = std::max(1, static_cast<int>(std::llround(value / mean_chain)));
  } else {
    throw InvalidInput("unknown sweep axis '" + name + "'");
  }
}

SweepAxis parse_sweep(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0) {
    throw InvalidInput("sweep '" + text + "' must look like name:a..b or name:v1,v2");
  }
  SweepAxis axis;
  axis.name = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  auto number = [&text](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidInput("bad number in sweep '" + text + "'");
    return v;
  };
  if (const auto dots = body.find(".."); dots != std::string::npos) {
    const double lo = number(body.substr(0, dots));
    auto rest = body.substr(dots + 2);
    double step = 1.0;
    if (const auto c = rest.find(':'); c != std::string::npos) {
      step = number(rest.substr(c + 1));
      rest = rest.substr(0, c);
    }
    const double hi = number(rest);
    if (!(step > 0) || hi < lo) throw InvalidInput("bad range in sweep '" + text + "'");
    for (double v = lo; v <= hi + 1e-9; v += step) axis.values.push_back(v);
  } else {
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) axis.values.push_back(number(item));
  }
  if (axis.values.empty()) throw InvalidInput("sweep '" + text + "' has no values");
  // Reject unknown names early.
  ScenarioSpec probe;
  apply_axis(probe, axis.name, axis.values.front());
  return axis;
}

std::vector<ScenarioSpec> grid(const ScenarioSpec& base, const std::vector<SweepAxis>& sweep) {
  std::vector<ScenarioSpec> out{base};
  for (const auto& axis : sweep) {
    std::vector<ScenarioSpec> next;
    next.reserve(out.size() * axis.values.size());
    for (const auto& spec : out) {
      for (const auto v : axis.values) {
        auto s = spec;
        apply_axis(s, axis.name, v);
        next.push_back(s);
      }
    }
    out = std::move(next);
  }
  if (!sweep.empty()) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i].seed = base.seed + i;
  }
  return out;
}

std::string scenario_id(const ScenarioSpec& spec) {
  return "n" + std::to_string(spec.servers) + "-d" + std::to_string(spec.demand_count) + "-c" +
         std::to_string(spec.chain_min) + "_" + std::to_string(spec.chain_max) + "-cap" +
         format_number(spec.vnf_capacity) + "-s" + std::to_string(spec.seed);
}

}  // namespace vnfswarm
