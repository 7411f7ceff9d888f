#include "vnfswarm/pso.hpp"

#include <algorithm>
#include <sstream>

#include "vnfswarm/format.hpp"

namespace vnfswarm {

double max_velocity(const Problem& problem, const SolverConfig& config) {
  return config.v_max_fraction * static_cast<double>(problem.server_count());
}

double inertia_at(const SolverConfig& config, int iteration) {
  if (config.iterations <= 1) return config.inertia_start;
  const double t = std::clamp(static_cast<double>(iteration) /
                                  static_cast<double>(config.iterations - 1),
                              0.0, 1.0);
  return config.inertia_start + (config.inertia_end - config.inertia_start) * t;
}

SwarmState init_swarm(const Problem& problem, const SolverConfig& config) {
  if (config.particles < 1) throw InvalidInput("swarm needs at least one particle");
  const auto dim = problem.dimension();
  const auto n = static_cast<double>(problem.server_count());
  const double v_max = max_velocity(problem, config);

  SwarmState state;
  state.rng_seed = config.seed;
  state.rng = Rng(config.seed);
  state.particles.resize(static_cast<std::size_t>(config.particles));

  std::size_t best = 0;
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    auto& p = state.particles[i];
    p.position.resize(dim);
    p.velocity.resize(dim);
    for (auto& x : p.position) x = state.rng.uniform(0.0, n);
    for (auto& v : p.velocity) v = state.rng.uniform(-v_max, v_max);
    p.best_position = p.position;
    auto report = fitness(p.position, problem, config);
    p.best_fitness = report.penalized_fitness;
    if (i == 0 || p.best_fitness < state.global_best_fitness) {
      best = i;
      state.global_best_fitness = p.best_fitness;
      state.global_best_report = std::move(report);
    }
  }
  state.global_best_position = state.particles[best].best_position;
  return state;
}

void step(SwarmState& state, const Problem& problem, const SolverConfig& config) {
  const double w = inertia_at(config, state.iteration);
  const double v_max = max_velocity(problem, config);
  const auto& global = state.global_best_position;

  for (auto& p : state.particles) {
    for (std::size_t k = 0; k < p.position.size(); ++k) {
      const double r1 = state.rng.uniform01();
      const double r2 = state.rng.uniform01();
      double v = w * p.velocity[k] + config.c1 * r1 * (p.best_position[k] - p.position[k]) +
                 config.c2 * r2 * (global[k] - p.position[k]);
      v = std::clamp(v, -v_max, v_max);
      p.velocity[k] = v;
      p.position[k] += v;
    }
  }

  // Evaluation is pure; this is the part that could run concurrently.
  std::vector<FitnessReport> reports;
  reports.reserve(state.particles.size());
  for (const auto& p : state.particles) reports.push_back(fitness(p.position, problem, config));

  std::ptrdiff_t improved_global = -1;
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    auto& p = state.particles[i];
    if (reports[i].penalized_fitness < p.best_fitness) {
      p.best_fitness = reports[i].penalized_fitness;
      p.best_position = p.position;
      if (p.best_fitness < state.global_best_fitness) {
        state.global_best_fitness = p.best_fitness;
        improved_global = static_cast<std::ptrdiff_t>(i);
      }
    }
  }
  if (improved_global >= 0) {
    const auto i = static_cast<std::size_t>(improved_global);
    state.global_best_position = state.particles[i].best_position;
    state.global_best_report = std::move(reports[i]);
  }
  ++state.iteration;
}

SolveResult run_pso(const Problem& problem, const SolverConfig& config) {
  auto state = init_swarm(problem, config);
  SolveResult result;
  result.trace.reserve(static_cast<std::size_t>(config.iterations));
  for (int it = 0; it < config.iterations; ++it) {
    step(state, problem, config);
    const auto& r = state.global_best_report;
    result.trace.push_back({state.iteration, state.global_best_fitness, r.feasible,
                            r.used_servers, r.utilization, r.avg_delay});
  }
  result.placement = decode(state.global_best_position, problem);
  result.report = std::move(state.global_best_report);
  return result;
}

std::string trace_to_csv(const ConvergenceTrace& trace) {
  std::ostringstream out;
  out << "iteration,global_best_fitness,feasible,T,U,dp_hat\n";
  for (const auto& t : trace) {
    out << t.iteration << ',' << format_number(t.global_best_fitness) << ','
        << (t.feasible ? 1 : 0) << ',' << t.used_servers << ','
        << format_number(t.utilization) << ',' << format_number(t.avg_delay) << '\n';
  }
  return out.str();
}

}  // namespace vnfswarm
