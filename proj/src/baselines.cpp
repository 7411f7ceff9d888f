#include "vnfswarm/baselines.hpp"

#include <string>
#include <vector>

#include "vnfswarm/decoder.hpp"
#include "vnfswarm/evaluation.hpp"
#include "vnfswarm/random.hpp"

namespace vnfswarm {

SolveResult random_solve(const Problem& problem, const SolverConfig& config,
                         std::uint64_t seed, int attempts) {
  if (attempts < 1) throw InvalidInput("random_solve needs attempts >= 1");
  Rng rng(seed);
  const auto n = problem.server_count();
  std::vector<ServerId> hosts(problem.dimension());
  SolveResult best;
  for (int a = 0; a < attempts; ++a) {
    for (auto& h : hosts) h = static_cast<ServerId>(rng.below(n));
    auto placement = place_hosts(hosts, problem);
    auto report = evaluate(placement, problem, config);
    const bool better = a == 0 || report.penalized_fitness < best.report.penalized_fitness;
    if (better || report.feasible) {
      best.placement = std::move(placement);
      best.report = std::move(report);
    }
    if (best.report.feasible) break;
  }
  return best;
}

std::uint64_t assignment_space_size(const Problem& problem) {
  const std::uint64_t n = problem.server_count();
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < problem.dimension(); ++k) {
    if (n != 0 && size > UINT64_MAX / n) return UINT64_MAX;
    size *= n;
  }
  return size;
}

SolveResult brute_force_solve(const Problem& problem, const SolverConfig& config,
                              std::uint64_t limit) {
  const auto space = assignment_space_size(problem);
  if (space > limit) {
    throw SpaceTooLargeError("assignment space " + std::to_string(space) +
                             " exceeds the oracle limit " + std::to_string(limit));
  }
  const auto n = static_cast<ServerId>(problem.server_count());
  std::vector<ServerId> hosts(problem.dimension(), 0);
  std::vector<ServerId> best_hosts = hosts;
  double best_value = 0.0;
  // Odometer in lexicographic order, last coordinate fastest; strict
  // improvement keeps the lexicographically smallest optimum.
  for (std::uint64_t i = 0; i < space; ++i) {
    const auto report = evaluate(place_hosts(hosts, problem), problem, config);
    if (i == 0 || report.penalized_fitness < best_value) {
      best_value = report.penalized_fitness;
      best_hosts = hosts;
    }
    for (auto k = hosts.size(); k-- > 0;) {
      if (++hosts[k] < n) break;
      hosts[k] = 0;
    }
  }
  SolveResult result;
  result.placement = place_hosts(best_hosts, problem);
  result.report = evaluate(result.placement, problem, config);
  return result;
}

}  // namespace vnfswarm
