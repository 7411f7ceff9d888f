#ifndef VNFSWARM_PSO_HPP_
#define VNFSWARM_PSO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vnfswarm/decoder.hpp"
#include "vnfswarm/evaluation.hpp"
#include "vnfswarm/problem.hpp"
#include "vnfswarm/random.hpp"

namespace vnfswarm {

struct Particle {
  std::vector<double> position;
  std::vector<double> velocity;
  std::vector<double> best_position;
  double best_fitness = 0.0;
};

struct SwarmState {
  std::vector<Particle> particles;
  std::vector<double> global_best_position;
  double global_best_fitness = 0.0;
  FitnessReport global_best_report;
  int iteration = 0;
  std::uint64_t rng_seed = 0;
  Rng rng{0};
};

struct TracePoint {
  int iteration = 0;
  double global_best_fitness = 0.0;
  bool feasible = false;
  int used_servers = 0;
  double utilization = 0.0;
  double avg_delay = 0.0;
};

using ConvergenceTrace = std::vector<TracePoint>;

struct SolveResult {
  Placement placement;
  FitnessReport report;
  ConvergenceTrace trace;
};

/// Velocity bound: v_max_fraction * N.
double max_velocity(const Problem& problem, const SolverConfig& config);

/// Inertia weight for the step that starts at `iteration`, interpolated
/// linearly from inertia_start (first step) to inertia_end (last step).
double inertia_at(const SolverConfig& config, int iteration);

/// Random positions in [0, N), velocities in [-v_max, v_max]; each
/// particle's personal best is its evaluated initial position.
/// Draw order: particle by particle, all position coordinates then all
/// velocity coordinates.
SwarmState init_swarm(const Problem& problem, const SolverConfig& config);

/// One velocity/position update of every particle followed by evaluation
/// and best tracking. Draw order: particle, coordinate, then r1 before r2.
void step(SwarmState& state, const Problem& problem, const SolverConfig& config);

/// init_swarm then `config.iterations` steps; the trace gets one point per step.
SolveResult run_pso(const Problem& problem, const SolverConfig& config);

/// CSV with header `iteration,global_best_fitness,feasible,T,U,dp_hat`.
std::string trace_to_csv(const ConvergenceTrace& trace);

}  // namespace vnfswarm

#endif  // VNFSWARM_PSO_HPP_
