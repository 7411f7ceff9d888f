#ifndef VNFSWARM_HARNESS_HPP_
#define VNFSWARM_HARNESS_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vnfswarm/io.hpp"
#include "vnfswarm/pso.hpp"

namespace vnfswarm {

enum class Algorithm { kPso, kRandom, kOracle };

const char* to_string(Algorithm algorithm);
/// Accepts "pso", "random" and "oracle".
Algorithm parse_algorithm(const std::string& name);

/// Runs one algorithm with the given seed. Oracle ignores the seed.
SolveResult solve(const Problem& problem, const SolverConfig& config, Algorithm algorithm,
                  std::uint64_t seed, int random_attempts = 100);

struct RunRecord {
  std::string scenario_id;
  Algorithm algorithm = Algorithm::kPso;
  std::uint64_t seed = 0;
  double wall_time_s = 0.0;
  double objective = 0.0;
  int used_servers = 0;
  double utilization = 0.0;
  double avg_delay = 0.0;
  bool feasible = false;
  double penalized_fitness = 0.0;
  std::string trace_file;
  bool trace_monotone = true;  // global best never increased along the trace
};

/// Header row of the results CSV.
std::string results_csv_header();
std::string to_csv_row(const RunRecord& record);

/// Append-only CSV store. Rows go to `<path>.partial` one line at a time
/// under a mutex; commit() renames the file into place.
class ResultsStore {
 public:
  explicit ResultsStore(std::filesystem::path path);
  ~ResultsStore();
  ResultsStore(const ResultsStore&) = delete;
  ResultsStore& operator=(const ResultsStore&) = delete;

  void append(const RunRecord& record);
  void commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path partial_;
  std::mutex mutex_;
  bool committed_ = false;
};

struct ExperimentOptions {
  std::vector<Algorithm> algorithms{Algorithm::kPso, Algorithm::kRandom};
  int repetitions = 20;
  std::uint64_t master_seed = 1;
  int workers = 1;
  int random_attempts = 100;
  /// Overrides applied on top of each instance's own config.
  std::optional<Json> config_overrides;
  /// When set, PSO traces are written here as CSV.
  std::optional<std::filesystem::path> trace_dir;
};

/// Seed of repetition `rep`: master_seed + rep.
std::uint64_t repetition_seed(std::uint64_t master_seed, int rep);

/// Runs every (instance, algorithm, repetition) triple. All instance files
/// are loaded and validated before the first run; a missing or invalid file
/// throws. Records come back in (instance, algorithm, repetition) order
/// regardless of worker count; `store` receives them as they finish.
std::vector<RunRecord> run_experiment(const Manifest& manifest,
                                      const std::filesystem::path& base_dir,
                                      const ExperimentOptions& options,
                                      ResultsStore* store = nullptr);

/// Same, for instances already in memory.
struct NamedInstance {
  std::string id;
  Instance instance;
};
std::vector<RunRecord> run_experiment(const std::vector<NamedInstance>& instances,
                                      const ExperimentOptions& options,
                                      ResultsStore* store = nullptr);

struct Stat {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for n < 2
};

Stat describe(const std::vector<double>& values);

struct SummaryRow {
  std::string scenario_id;
  Algorithm algorithm = Algorithm::kPso;
  std::size_t runs = 0;
  Stat wall_time_s;
  Stat used_servers;
  Stat utilization;
  Stat avg_delay;
  Stat objective;
  double feasible_rate = 0.0;
};

/// (random - pso) / random of the per-scenario means; empty when a side is
/// missing or the random mean is zero.
struct Reduction {
  std::string scenario_id;
  std::optional<double> utilization;
  std::optional<double> avg_delay;
  std::optional<double> used_servers;
};

struct Summary {
  std::vector<SummaryRow> rows;  // sorted by (scenario_id, algorithm)
  std::vector<Reduction> reductions;
};

/// Order of `records` does not affect the result.
Summary aggregate(const std::vector<RunRecord>& records);

/// Summary keyed by scenario id, with each scenario's spec from the manifest.
Json summary_to_json(const Summary& summary, const Manifest& manifest);

/// Plot-ready TSV: one row per (scenario, algorithm) with the x value taken
/// from the manifest spec (`chain`, `servers`, `demands`, `requested` or
/// `vnf_capacity`) and mean/stddev of the named metric.
std::string plot_tsv(const Summary& summary, const Manifest& manifest, const std::string& x_axis,
                     const std::string& metric);

}  // namespace vnfswarm

#endif  // VNFSWARM_HARNESS_HPP_
