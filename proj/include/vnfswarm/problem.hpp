#ifndef VNFSWARM_PROBLEM_HPP_
#define VNFSWARM_PROBLEM_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "vnfswarm/model.hpp"
#include "vnfswarm/routing.hpp"

namespace vnfswarm {

class InvalidInstance : public InvalidInput {
 public:
  explicit InvalidInstance(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// A validated instance plus everything derived from it once: the all-pairs
/// routing table, the decoder's (demand, chain position) enumeration and
/// catalog lookups. Read-only after construction, so one Problem can be
/// shared by concurrent evaluations.
class Problem {
 public:
  /// Throws InvalidInstance when validate_instance reports violations.
  explicit Problem(Instance instance);

  const Instance& instance() const { return instance_; }
  const Topology& topology() const { return instance_.topology; }
  const VnfCatalog& catalog() const { return instance_.catalog; }
  const SolverConfig& config() const { return instance_.config; }
  const RoutingTable& routes() const { return routes_; }

  std::size_t server_count() const { return instance_.topology.servers.size(); }
  std::size_t link_count() const { return instance_.topology.links.size(); }
  /// Length of a particle position: total chain length over all demands.
  std::size_t dimension() const { return dimension_; }

  /// Demands sorted by id; this is the decoder's enumeration order.
  std::size_t demand_count() const { return ordered_.size(); }
  const Demand& demand(std::size_t k) const { return instance_.demands[ordered_[k]]; }
  /// First coordinate of demand k in the position vector.
  std::size_t offset(std::size_t k) const { return offsets_[k]; }
  /// Catalog indices of the chain of demand k, in chain order.
  std::span<const std::size_t> chain_types(std::size_t k) const { return chain_types_[k]; }
  /// Sum of BW_f over the distinct types of demand k's chain.
  double chain_bandwidth(std::size_t k) const { return chain_bandwidth_[k]; }

 private:
  Instance instance_;
  RoutingTable routes_;
  std::size_t dimension_ = 0;
  std::vector<std::size_t> ordered_;
  std::vector<std::size_t> offsets_;
  std::vector<std::vector<std::size_t>> chain_types_;
  std::vector<double> chain_bandwidth_;
};

}  // namespace vnfswarm

#endif  // VNFSWARM_PROBLEM_HPP_
