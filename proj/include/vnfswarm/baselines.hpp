#ifndef VNFSWARM_BASELINES_HPP_
#define VNFSWARM_BASELINES_HPP_

#include <cstdint>

#include "vnfswarm/problem.hpp"
#include "vnfswarm/pso.hpp"

namespace vnfswarm {

class SpaceTooLargeError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::uint64_t kDefaultOracleLimit = 100000;

/// Draws uniform host assignments until one is feasible, up to `attempts`
/// draws; otherwise returns the draw with the smallest penalized fitness
/// (earliest draw wins ties). The trace is left empty.
SolveResult random_solve(const Problem& problem, const SolverConfig& config,
                         std::uint64_t seed, int attempts = 100);

/// N^(dimension), saturating at UINT64_MAX.
std::uint64_t assignment_space_size(const Problem& problem);

/// Exhaustive minimum of penalized fitness over every host assignment; ties
/// go to the lexicographically smallest host vector. Throws
/// SpaceTooLargeError when the space exceeds `limit`.
SolveResult brute_force_solve(const Problem& problem, const SolverConfig& config,
                              std::uint64_t limit = kDefaultOracleLimit);

}  // namespace vnfswarm

#endif  // VNFSWARM_BASELINES_HPP_
