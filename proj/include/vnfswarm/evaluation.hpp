#ifndef VNFSWARM_EVALUATION_HPP_
#define VNFSWARM_EVALUATION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "vnfswarm/decoder.hpp"
#include "vnfswarm/model.hpp"
#include "vnfswarm/problem.hpp"

namespace vnfswarm {

/// Constraint excess magnitudes; zero entries mean the constraint holds.
struct Violations {
  std::vector<double> server_excess;  // indexed by server id
  std::vector<double> link_excess;    // indexed by link id
  std::vector<double> path_excess;    // aligned with Placement::paths

  bool any() const;
  double total() const;
};

struct FitnessReport {
  double objective = 0.0;
  int used_servers = 0;    // T
  double utilization = 0;  // U
  double avg_delay = 0;    // mean path delay
  Violations violations;
  double penalty = 0.0;
  double penalized_fitness = 0.0;
  bool feasible = true;
};

/// Mean delay over `paths`. Throws InvalidInput when empty.
double avg_path_delay(std::span<const Path> paths);

/// Bandwidth carried by each link (indexed by link id). Every traversal of a
/// link by a demand's path adds the BW of each distinct type in its chain.
std::vector<double> link_loads(const Placement& placement, const Topology& topology,
                               const VnfCatalog& catalog, std::span<const Demand> demands);

/// Mean of load/bandwidth over all links, unused links included.
double avg_link_utilization(std::span<const double> loads, const Topology& topology);

/// Processing capacity consumed on each server by the hosted VNF instances.
std::vector<double> server_usage(const Placement& placement, const Topology& topology,
                                 const VnfCatalog& catalog);

Violations check_constraints(const Placement& placement, const Topology& topology,
                             const VnfCatalog& catalog, std::span<const Demand> demands,
                             double dp_max);

/// w1*T/N + w2*U + w3*dp_hat/dp_max.
double objective(int used_servers, double utilization, double avg_delay,
                 const SolverConfig& config, std::size_t server_count, double dp_max);

/// Scores a placement. The penalty adds penalty_weight times the sum of all
/// excesses, each divided by its bound (S_n, B_l or dp_max).
FitnessReport evaluate(const Placement& placement, const Problem& problem,
                       const SolverConfig& config);

FitnessReport fitness(std::span<const double> position, const Problem& problem,
                      const SolverConfig& config);

}  // namespace vnfswarm

#endif  // VNFSWARM_EVALUATION_HPP_
