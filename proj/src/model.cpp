#include "vnfswarm/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vnfswarm {

const VnfTypeSpec* VnfCatalog::find(VnfTypeId id) const {
  for (const auto& t : types) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmptyTopology: return "empty-topology";
    case ViolationKind::kServerId: return "server-id";
    case ViolationKind::kServerCapacity: return "server-capacity";
    case ViolationKind::kLinkId: return "link-id";
    case ViolationKind::kLinkEndpoint: return "link-endpoint";
    case ViolationKind::kLinkBandwidth: return "link-bandwidth";
    case ViolationKind::kLinkDelay: return "link-delay";
    case ViolationKind::kDisconnected: return "disconnected";
    case ViolationKind::kEmptyCatalog: return "empty-catalog";
    case ViolationKind::kDuplicateVnfType: return "duplicate-vnf-type";
    case ViolationKind::kVnfCapacity: return "vnf-capacity";
    case ViolationKind::kVnfBandwidth: return "vnf-bandwidth";
    case ViolationKind::kDuplicateDemand: return "duplicate-demand";
    case ViolationKind::kDemandEndpoint: return "demand-endpoint";
    case ViolationKind::kUnknownVnfType: return "unknown-vnf-type";
    case ViolationKind::kChainLength: return "chain-length";
  }
  return "unknown";
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

// Union-find over server ids; used only for the connectivity check.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ValidationReport validate_instance(const Topology& topology,
                                   const VnfCatalog& catalog,
                                   std::span<const Demand> demands,
                                   ChainBounds bounds) {
  ValidationReport report;
  auto add = [&report](ViolationKind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  const auto n = static_cast<ServerId>(topology.servers.size());
  if (n == 0) add(ViolationKind::kEmptyTopology, "topology has no servers");

  for (std::size_t i = 0; i < topology.servers.size(); ++i) {
    const auto& s = topology.servers[i];
    if (s.id != static_cast<ServerId>(i)) {
      add(ViolationKind::kServerId, "server at position " + std::to_string(i) +
                                        " has id " + std::to_string(s.id) +
                                        " (ids must be 0..N-1 in order)");
    }
    if (!positive(s.capacity)) {
      add(ViolationKind::kServerCapacity,
          "server " + std::to_string(s.id) + " capacity must be > 0");
    }
  }

  auto valid_server = [n](ServerId id) { return id >= 0 && id < n; };

  bool endpoints_ok = true;
  for (std::size_t i = 0; i < topology.links.size(); ++i) {
    const auto& l = topology.links[i];
    const auto tag = "link " + std::to_string(l.id);
    if (l.id != static_cast<LinkId>(i)) {
      add(ViolationKind::kLinkId, "link at position " + std::to_string(i) +
                                      " has id " + std::to_string(l.id) +
                                      " (ids must be 0..L-1 in order)");
    }
    const auto [a, b] = l.endpoints;
    if (!valid_server(a) || !valid_server(b)) {
      endpoints_ok = false;
      add(ViolationKind::kLinkEndpoint, tag + " references an unknown server");
    } else if (a == b) {
      add(ViolationKind::kLinkEndpoint, tag + " is a self-loop");
    }
    if (!positive(l.bandwidth)) {
      add(ViolationKind::kLinkBandwidth, tag + " bandwidth must be > 0");
    }
    if (!positive(l.delay)) {
      add(ViolationKind::kLinkDelay, tag + " delay must be > 0");
    }
  }

  if (n > 0 && endpoints_ok) {
    DisjointSets sets(static_cast<std::size_t>(n));
    for (const auto& l : topology.links) {
      sets.unite(static_cast<std::size_t>(l.endpoints[0]),
                 static_cast<std::size_t>(l.endpoints[1]));
    }
    const auto root = sets.find(0);
    for (ServerId s = 1; s < n; ++s) {
      if (sets.find(static_cast<std::size_t>(s)) != root) {
        add(ViolationKind::kDisconnected,
            "server " + std::to_string(s) + " is not reachable from server 0");
      }
    }
  }

  if (catalog.types.empty()) add(ViolationKind::kEmptyCatalog, "catalog is empty");
  std::set<VnfTypeId> type_ids;
  for (const auto& t : catalog.types) {
    const auto tag = "vnf type " + std::to_string(t.id);
    if (!type_ids.insert(t.id).second) {
      add(ViolationKind::kDuplicateVnfType, tag + " is defined twice");
    }
    if (!positive(t.capacity)) add(ViolationKind::kVnfCapacity, tag + " capacity must be > 0");
    if (!positive(t.bandwidth)) add(ViolationKind::kVnfBandwidth, tag + " bandwidth must be > 0");
  }

  std::set<DemandId> demand_ids;
  for (const auto& d : demands) {
    const auto tag = "demand " + std::to_string(d.id);
    if (!demand_ids.insert(d.id).second) {
      add(ViolationKind::kDuplicateDemand, tag + " is defined twice");
    }
    if (!valid_server(d.source) || !valid_server(d.destination)) {
      add(ViolationKind::kDemandEndpoint, tag + " source/destination is not a server");
    }
    if (d.chain.size() < bounds.min || d.chain.size() > bounds.max) {
      add(ViolationKind::kChainLength,
          tag + " chain length " + std::to_string(d.chain.size()) + " is out of bounds");
    }
    for (const auto type : d.chain) {
      if (!type_ids.contains(type)) {
        add(ViolationKind::kUnknownVnfType,
            tag + " references undefined vnf type " + std::to_string(type));
      }
    }
  }
  return report;
}

std::vector<std::string> validate_config(const SolverConfig& config) {
  std::vector<std::string> errors;
  if (!(config.w1 >= 0 && config.w2 >= 0 && config.w3 >= 0)) {
    errors.emplace_back("weights w1, w2, w3 must be non-negative");
  }
  if (!(config.weight_sum() > 0)) errors.emplace_back("w1 + w2 + w3 must be > 0");
  if (config.particles < 1) errors.emplace_back("particles must be >= 1");
  if (config.iterations < 1) errors.emplace_back("iterations must be >= 1");
  if (!positive(config.dp_max)) errors.emplace_back("dp_max must be > 0");
  if (!positive(config.penalty_weight)) errors.emplace_back("penalty_weight must be > 0");
  if (!(config.v_max_fraction > 0 && config.v_max_fraction <= 1)) {
    errors.emplace_back("v_max_fraction must be in (0, 1]");
  }
  if (!std::isfinite(config.c1) || !std::isfinite(config.c2) ||
      !std::isfinite(config.inertia_start) || !std::isfinite(config.inertia_end)) {
    errors.emplace_back("c1, c2 and inertia bounds must be finite");
  }
  return errors;
}

}  // namespace vnfswarm
