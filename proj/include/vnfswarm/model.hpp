#ifndef VNFSWARM_MODEL_HPP_
#define VNFSWARM_MODEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vnfswarm {

using ServerId = std::int32_t;
using LinkId = std::int32_t;
using VnfTypeId = std::int32_t;
using DemandId = std::int32_t;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an argument violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

struct ServerSpec {
  ServerId id = 0;
  double capacity = 0.0;  // processing units
};

/// Undirected link with symmetric bandwidth.
struct LinkSpec {
  LinkId id = 0;
  std::array<ServerId, 2> endpoints{0, 0};
  double bandwidth = 0.0;
  double delay = 0.0;
};

struct Topology {
  std::string name;
  std::vector<ServerSpec> servers;
  std::vector<LinkSpec> links;

  std::size_t server_count() const { return servers.size(); }
  std::size_t link_count() const { return links.size(); }
};

struct VnfTypeSpec {
  VnfTypeId id = 0;
  double capacity = 0.0;
  double bandwidth = 0.0;
};

struct VnfCatalog {
  std::vector<VnfTypeSpec> types;

  /// Returns nullptr when `id` is not in the catalog.
  const VnfTypeSpec* find(VnfTypeId id) const;
};

/// A service-chain request: traffic from `source` to `destination` that must
/// traverse the VNF types of `chain` in order.
struct Demand {
  DemandId id = 0;
  ServerId source = 0;
  ServerId destination = 0;
  std::vector<VnfTypeId> chain;
};

struct SolverConfig {
  int particles = 20;
  int iterations = 100;
  double w1 = 0.5;
  double w2 = 0.25;
  double w3 = 0.25;
  double c1 = 2.05;
  double c2 = 2.05;
  double inertia_start = 0.9;
  double inertia_end = 0.4;
  double dp_max = 1.0;
  std::uint64_t seed = 1;
  double penalty_weight = 10.0;
  double v_max_fraction = 0.5;

  double weight_sum() const { return w1 + w2 + w3; }
};

/// A complete problem instance as stored in an instance file.
struct Instance {
  Topology topology;
  VnfCatalog catalog;
  std::vector<Demand> demands;
  SolverConfig config;
};

enum class ViolationKind {
  kEmptyTopology,
  kServerId,
  kServerCapacity,
  kLinkId,
  kLinkEndpoint,
  kLinkBandwidth,
  kLinkDelay,
  kDisconnected,
  kEmptyCatalog,
  kDuplicateVnfType,
  kVnfCapacity,
  kVnfBandwidth,
  kDuplicateDemand,
  kDemandEndpoint,
  kUnknownVnfType,
  kChainLength,
};

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
  bool operator==(const ValidationReport&) const = default;
};

/// Inclusive bounds on demand chain length.
struct ChainBounds {
  std::size_t min = 1;
  std::size_t max = std::numeric_limits<std::size_t>::max();
};

ValidationReport validate_instance(const Topology& topology,
                                   const VnfCatalog& catalog,
                                   std::span<const Demand> demands,
                                   ChainBounds bounds = {});

/// Solver configuration checks; returns one message per broken invariant.
std::vector<std::string> validate_config(const SolverConfig& config);

}  // namespace vnfswarm

#endif  // VNFSWARM_MODEL_HPP_
