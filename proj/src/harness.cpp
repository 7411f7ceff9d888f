#include "vnfswarm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>
#include <tuple>

#include "vnfswarm/baselines.hpp"
#include "vnfswarm/format.hpp"

namespace vnfswarm {

const char* to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kPso: return "pso";
    case Algorithm::kRandom: return "random";
    case Algorithm::kOracle: return "oracle";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "pso") return Algorithm::kPso;
  if (name == "random") return Algorithm::kRandom;
  if (name == "oracle") return Algorithm::kOracle;
  throw InvalidInput("unknown algorithm '" + name + "' (expected pso, random or oracle)");
}

SolveResult solve(const Problem& problem, const SolverConfig& config, Algorithm algorithm,
                  std::uint64_t seed, int random_attempts) {
  switch (algorithm) {
    case Algorithm::kPso: {
      auto seeded = config;
      seeded.seed = seed;
      return run_pso(problem, seeded);
    }
    case Algorithm::kRandom:
      return random_solve(problem, config, seed, random_attempts);
    case Algorithm::kOracle:
      return brute_force_solve(problem, config);
  }
  throw InvalidInput("unknown algorithm");
}

std::string results_csv_header() {
  return "scenario_id,algorithm,seed,wall_time_s,objective,T,U,dp_hat,feasible\n";
}

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << r.scenario_id << ',' << to_string(r.algorithm) << ',' << r.seed << ','
      << format_number(r.wall_time_s) << ',' << format_number(r.objective) << ','
      << r.used_servers << ',' << format_number(r.utilization) << ','
      << format_number(r.avg_delay) << ',' << (r.feasible ? 1 : 0) << '\n';
  return out.str();
}

ResultsStore::ResultsStore(std::filesystem::path path)
    : path_(std::move(path)), partial_(path_.string() + ".partial") {
  std::ofstream out(partial_, std::ios::trunc);
  if (!out) throw Error("cannot create " + partial_.string());
  out << results_csv_header();
}

ResultsStore::~ResultsStore() {
  if (!committed_) {
    std::error_code ec;
    std::filesystem::remove(partial_, ec);
  }
}

void ResultsStore::append(const RunRecord& record) {
  const auto row = to_csv_row(record);
  std::lock_guard lock(mutex_);
  std::ofstream out(partial_, std::ios::app);
  out << row;
  out.flush();
  if (!out) throw Error("failed appending to " + partial_.string());
}

void ResultsStore::commit() {
  std::lock_guard lock(mutex_);
  std::filesystem::rename(partial_, path_);
  committed_ = true;
}

std::uint64_t repetition_seed(std::uint64_t master_seed, int rep) {
  return master_seed + static_cast<std::uint64_t>(rep);
}

namespace {

bool monotone(const ConvergenceTrace& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].global_best_fitness > trace[i - 1].global_best_fitness) return false;
  }
  return true;
}

struct Task {
  std::size_t instance;
  Algorithm algorithm;
  int rep;
};

}  // namespace

std::vector<RunRecord> run_experiment(const std::vector<NamedInstance>& instances,
                                      const ExperimentOptions& options,
                                      ResultsStore* store) {
  if (options.repetitions < 1) throw InvalidInput("repetitions must be >= 1");
  std::vector<Problem> problems;
  std::vector<SolverConfig> configs;
  problems.reserve(instances.size());
  for (const auto& named : instances) {
    auto config = named.instance.config;
    if (options.config_overrides) config = config_from_json(*options.config_overrides, config);
    if (const auto errors = validate_config(config); !errors.empty()) {
      throw InvalidInput(named.id + ": " + errors.front());
    }
    problems.emplace_back(named.instance);
    configs.push_back(config);
    const bool wants_oracle = std::find(options.algorithms.begin(), options.algorithms.end(),
                                        Algorithm::kOracle) != options.algorithms.end();
    if (wants_oracle && assignment_space_size(problems.back()) > kDefaultOracleLimit) {
      throw SpaceTooLargeError(named.id + ": assignment space too large for the oracle");
    }
  }

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (const auto algorithm : options.algorithms) {
      for (int rep = 0; rep < options.repetitions; ++rep) tasks.push_back({i, algorithm, rep});
    }
  }
  std::vector<RunRecord> records(tasks.size());

  auto run_task = [&](std::size_t t) {
    const auto& task = tasks[t];
    const auto seed = repetition_seed(options.master_seed, task.rep);
    const auto start = std::chrono::steady_clock::now();
    const auto result = solve(problems[task.instance], configs[task.instance], task.algorithm,
                              seed, options.random_attempts);
    const auto stop = std::chrono::steady_clock::now();

    RunRecord r;
    r.scenario_id = instances[task.instance].id;
    r.algorithm = task.algorithm;
    r.seed = seed;
    r.wall_time_s = std::chrono::duration<double>(stop - start).count();
    r.objective = result.report.objective;
    r.used_servers = result.report.used_servers;
    r.utilization = result.report.utilization;
    r.avg_delay = result.report.avg_delay;
    r.feasible = result.report.feasible;
    r.penalized_fitness = result.report.penalized_fitness;
    r.trace_monotone = monotone(result.trace);
    if (options.trace_dir && !result.trace.empty()) {
      const auto file = *options.trace_dir /
                        (r.scenario_id + "__" + to_string(r.algorithm) + "__" +
                         std::to_string(seed) + ".csv");
      write_file_atomic(file, trace_to_csv(result.trace));
      r.trace_file = file.string();
    }
    if (store != nullptr) store->append(r);
    records[t] = std::move(r);
  };

  const auto workers = static_cast<std::size_t>(std::max(1, options.workers));
  if (workers == 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++) {
          try {
            run_task(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = tasks.size();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  return records;
}

std::vector<RunRecord> run_experiment(const Manifest& manifest,
                                      const std::filesystem::path& base_dir,
                                      const ExperimentOptions& options, ResultsStore* store) {
  std::vector<NamedInstance> instances;
  for (const auto& entry : manifest.entries) {
    const auto path = base_dir / entry.file;
    if (!std::filesystem::exists(path)) {
      throw Error("manifest entry '" + entry.id + "': missing instance file " + path.string());
    }
    instances.push_back({entry.id, load_instance(path)});
  }
  return run_experiment(instances, options, store);
}

Stat describe(const std::vector<double>& values) {
  Stat s;
  if (values.empty()) return s;
  // Sorting first makes the sums independent of record order.
  auto sorted = values;
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (const auto v : sorted) sum += v;
  s.mean = sum / static_cast<double>(sorted.size());
  if (sorted.size() > 1) {
    double sq = 0.0;
    for (const auto v : sorted) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(sorted.size() - 1));
  }
  return s;
}

Summary aggregate(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::string, Algorithm>, std::vector<const RunRecord*>> groups;
  for (const auto& r : records) groups[{r.scenario_id, r.algorithm}].push_back(&r);

  Summary summary;
  for (const auto& [key, group] : groups) {
    SummaryRow row;
    row.scenario_id = key.first;
    row.algorithm = key.second;
    row.runs = group.size();
    std::vector<double> wall, t, u, dp, obj;
    double feasible = 0;
    for (const auto* r : group) {
      wall.push_back(r->wall_time_s);
      t.push_back(r->used_servers);
      u.push_back(r->utilization);
      dp.push_back(r->avg_delay);
      obj.push_back(r->objective);
      feasible += r->feasible ? 1.0 : 0.0;
    }
    row.wall_time_s = describe(wall);
    row.used_servers = describe(t);
    row.utilization = describe(u);
    row.avg_delay = describe(dp);
    row.objective = describe(obj);
    row.feasible_rate = feasible / static_cast<double>(group.size());
    summary.rows.push_back(row);
  }

  auto find = [&](const std::string& id, Algorithm a) -> const SummaryRow* {
    for (const auto& row : summary.rows) {
      if (row.scenario_id == id && row.algorithm == a) return &row;
    }
    return nullptr;
  };
  auto reduction = [](double random, double pso) -> std::optional<double> {
    if (random == 0.0) return std::nullopt;
    return (random - pso) / random;
  };
  for (const auto& row : summary.rows) {
    if (row.algorithm != Algorithm::kPso) continue;
    const auto* rnd = find(row.scenario_id, Algorithm::kRandom);
    if (rnd == nullptr) continue;
    summary.reductions.push_back(
        {row.scenario_id, reduction(rnd->utilization.mean, row.utilization.mean),
         reduction(rnd->avg_delay.mean, row.avg_delay.mean),
         reduction(rnd->used_servers.mean, row.used_servers.mean)});
  }
  return summary;
}

namespace {

Json stat_json(const Stat& s) { return Json{{"mean", s.mean}, {"stddev", s.stddev}}; }

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

const ManifestEntry* entry_for(const Manifest& manifest, const std::string& id) {
  for (const auto& e : manifest.entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

double axis_value(const ScenarioSpec& spec, const std::string& axis) {
  if (axis == "chain") return (spec.chain_min + spec.chain_max) / 2.0;
  if (axis == "servers") return spec.servers;
  if (axis == "demands") return spec.demand_count;
  if (axis == "requested") return spec.demand_count * (spec.chain_min + spec.chain_max) / 2.0;
  if (axis == "vnf_capacity") return spec.vnf_capacity;
  throw InvalidInput("unknown plot axis '" + axis + "'");
}

Stat metric_of(const SummaryRow& row, const std::string& metric) {
  if (metric == "wall_time_s") return row.wall_time_s;
  if (metric == "U") return row.utilization;
  if (metric == "dp_hat") return row.avg_delay;
  if (metric == "T") return row.used_servers;
  if (metric == "objective") return row.objective;
  throw InvalidInput("unknown plot metric '" + metric + "'");
}

}  // namespace

Json summary_to_json(const Summary& summary, const Manifest& manifest) {
  Json scenarios = Json::object();
  for (const auto& row : summary.rows) {
    auto& node = scenarios[row.scenario_id];
    if (!node.contains("spec")) {
      const auto* entry = entry_for(manifest, row.scenario_id);
      node["spec"] = entry ? to_json(entry->spec) : Json(nullptr);
    }
    node["algorithms"][to_string(row.algorithm)] = {
        {"runs", row.runs},
        {"wall_time_s", stat_json(row.wall_time_s)},
        {"T", stat_json(row.used_servers)},
        {"U", stat_json(row.utilization)},
        {"dp_hat", stat_json(row.avg_delay)},
        {"objective", stat_json(row.objective)},
        {"feasible_rate", row.feasible_rate}};
  }
  for (const auto& red : summary.reductions) {
    scenarios[red.scenario_id]["reduction_vs_random"] = {
        {"U", optional_json(red.utilization)},
        {"dp_hat", optional_json(red.avg_delay)},
        {"T", optional_json(red.used_servers)}};
  }
  return Json{{"scenarios", scenarios}};
}

std::string plot_tsv(const Summary& summary, const Manifest& manifest, const std::string& x_axis,
                     const std::string& metric) {
  std::vector<std::tuple<double, std::string, std::string, Stat>> rows;
  for (const auto& row : summary.rows) {
    const auto* entry = entry_for(manifest, row.scenario_id);
    if (entry == nullptr) continue;
    rows.emplace_back(axis_value(entry->spec, x_axis), to_string(row.algorithm), row.scenario_id,
                      metric_of(row, metric));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<1>(a), std::get<0>(a), std::get<2>(a)) <
           std::tie(std::get<1>(b), std::get<0>(b), std::get<2>(b));
  });
  std::ostringstream out;
  out << x_axis << "\talgorithm\tscenario_id\t" << metric << "_mean\t" << metric << "_stddev\n";
  for (const auto& [x, algo, id, stat] : rows) {
    out << format_number(x) << '\t' << algo << '\t' << id << '\t' << format_number(stat.mean)
        << '\t' << format_number(stat.stddev) << '\n';
  }
  return out.str();
}

}  // namespace vnfswarm
