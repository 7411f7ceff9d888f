// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Usage: vnfswarm_acceptance --cli <path> --work-dir <dir>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "vnfswarm/baselines.hpp"
#include "vnfswarm/harness.hpp"

namespace fs = std::filesystem;
using namespace vnfswarm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::printf("[%s] criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Shared across criteria 5 and 8.
struct Ledger {
  std::size_t runs = 0;
  std::size_t non_monotone = 0;
  std::size_t feasible = 0;
  std::size_t out_of_bounds = 0;

  void trace(const ConvergenceTrace& t) {
    ++runs;
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (t[i].global_best_fitness > t[i - 1].global_best_fitness) {
        ++non_monotone;
        return;
      }
    }
  }
  void objective(bool is_feasible, double value, const SolverConfig& config) {
    if (!is_feasible) return;
    ++feasible;
    if (!(value > 0.0 && value <= config.weight_sum())) ++out_of_bounds;
  }
  void record(const RunRecord& r, const SolverConfig& config) {
    if (r.algorithm == Algorithm::kPso) {
      ++runs;
      if (!r.trace_monotone) ++non_monotone;
    }
    objective(r.feasible, r.objective, config);
  }
};

Ledger ledger;

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  constexpr int kInstances = 60;
  int matched = 0;
  double worst = 0.0;
  for (int i = 0; i < kInstances; ++i) {
    const Problem problem(testing::tiny_instance(static_cast<std::uint64_t>(i)));
    auto config = problem.config();
    config.particles = 20;
    config.iterations = 100;
    const auto oracle = brute_force_solve(problem, config);
    ledger.objective(oracle.report.feasible, oracle.report.objective, config);
    double best = INFINITY;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      config.seed = seed;
      const auto r = run_pso(problem, config);
      ledger.trace(r.trace);
      ledger.objective(r.report.feasible, r.report.objective, config);
      best = std::min(best, r.report.penalized_fitness);
    }
    const double target = oracle.report.penalized_fitness;
    const double rel = std::abs(best - target) / std::max(1.0, std::abs(target));
    worst = std::max(worst, rel);
    if (rel <= 1e-9) ++matched;
  }
  const double elapsed = seconds_since(start);
  Outcome o;
  o.pass = matched == kInstances && elapsed < 120.0;
  o.detail = std::to_string(matched) + "/" + std::to_string(kInstances) +
             " instances matched, worst rel err " + fmt("%.3g", worst) + ", " +
             fmt("%.1f", elapsed) + " s";
  return o;
}

Outcome five_node_fixture() {
  const auto inst = load_instance(fs::path(VNFSWARM_DATA_DIR) / "five_node.json");
  const Problem problem(inst);
  auto config = problem.config();
  const auto oracle = brute_force_solve(problem, config);
  ledger.objective(oracle.report.feasible, oracle.report.objective, config);
  int good = 0;
  double best = INFINITY;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    config.seed = seed;
    const auto r = run_pso(problem, config);
    ledger.trace(r.trace);
    ledger.objective(r.report.feasible, r.report.objective, config);
    if (r.report.feasible && r.report.used_servers <= 2) ++good;
    best = std::min(best, r.report.penalized_fitness);
  }
  Outcome o;
  o.pass = good == 20 && oracle.report.feasible && best == oracle.report.penalized_fitness;
  o.detail = std::to_string(good) + "/20 PSO runs feasible with T<=2; oracle T=" +
             std::to_string(oracle.report.used_servers) + " objective " +
             fmt("%.10g", oracle.report.objective) + ", best PSO " + fmt("%.10g", best);
  return o;
}

std::vector<NamedInstance> named(const std::vector<ScenarioSpec>& specs) {
  std::vector<NamedInstance> out;
  for (const auto& s : specs) out.push_back({scenario_id(s), generate(s)});
  return out;
}

// Criteria 3 and 4 share one experiment: generator defaults on the
// 16/32-server x 30/150-demand grid, three instance replicates.
struct Dominance {
  Summary summary;
  double elapsed = 0.0;
};

Dominance baseline_experiment() {
  std::vector<ScenarioSpec> specs;
  for (std::uint64_t base : {1u, 101u, 201u}) {
    ScenarioSpec t;
    t.seed = base;
    const auto g = grid(t, {parse_sweep("servers:16,32"), parse_sweep("demands:30,150")});
    specs.insert(specs.end(), g.begin(), g.end());
  }
  const auto instances = named(specs);
  ExperimentOptions opts;
  opts.repetitions = 20;
  const auto start = Clock::now();
  const auto records = run_experiment(instances, opts);
  Dominance d;
  d.elapsed = seconds_since(start);
  for (const auto& r : records) ledger.record(r, instances.front().instance.config);
  d.summary = aggregate(records);
  return d;
}

Outcome reduction_outcome(const Dominance& d, bool utilization, double threshold) {
  std::map<std::string, std::map<Algorithm, const SummaryRow*>> by_id;
  for (const auto& row : d.summary.rows) by_id[row.scenario_id][row.algorithm] = &row;
  int dominated = 0, total = 0;
  double sum = 0.0, lo = INFINITY, hi = -INFINITY;
  std::string per;
  for (const auto& [id, algos] : by_id) {
    const auto& pso = utilization ? algos.at(Algorithm::kPso)->utilization
                                  : algos.at(Algorithm::kPso)->avg_delay;
    const auto& rnd = utilization ? algos.at(Algorithm::kRandom)->utilization
                                  : algos.at(Algorithm::kRandom)->avg_delay;
    const double red = (rnd.mean - pso.mean) / rnd.mean;
    ++total;
    if (pso.mean <= rnd.mean) ++dominated;
    sum += red;
    lo = std::min(lo, red);
    hi = std::max(hi, red);
    per += " " + id + "=" + fmt("%.1f%%", 100 * red);
  }
  const double mean = sum / total;
  Outcome o;
  o.pass = dominated == total && mean >= threshold;
  if (utilization) o.pass = o.pass && d.elapsed < 600.0;
  o.detail = std::to_string(dominated) + "/" + std::to_string(total) +
             " scenarios with pso <= random; mean reduction " + fmt("%.1f%%", 100 * mean) +
             " (min " + fmt("%.1f%%", 100 * lo) + ", max " + fmt("%.1f%%", 100 * hi) + ")";
  if (utilization) o.detail += ", " + fmt("%.1f", d.elapsed) + " s";
  o.detail += ";" + per;
  return o;
}

// Means per sweep point for PSO; counts decreases between neighbours.
int inversions(const std::vector<double>& xs) {
  int n = 0;
  for (std::size_t i = 1; i < xs.size(); ++i) n += xs[i] < xs[i - 1];
  return n;
}

std::string join(const std::vector<double>& xs, const char* f) {
  std::string s;
  for (const auto x : xs) s += (s.empty() ? "" : ",") + fmt(f, x);
  return s;
}

Outcome trends() {
  ExperimentOptions opts;
  opts.repetitions = 20;
  opts.algorithms = {Algorithm::kPso};

  ScenarioSpec chain_template;
  chain_template.servers = 32;
  chain_template.demand_count = 30;
  chain_template.clone_demands = true;
  chain_template.seed = 1000;
  // One network and one set of endpoints for the whole sweep: only the
  // chain length varies.
  std::vector<ScenarioSpec> chain_specs;
  for (int c = 1; c <= 9; ++c) {
    auto s = chain_template;
    apply_axis(s, "chain", c);
    chain_specs.push_back(s);
  }
  const auto chain_inst = named(chain_specs);
  const auto chain_runs = run_experiment(chain_inst, opts);
  for (const auto& r : chain_runs) ledger.record(r, chain_inst.front().instance.config);

  ScenarioSpec server_template;
  server_template.demand_count = 30;
  server_template.seed = 2000;
  const auto server_specs = grid(server_template, {parse_sweep("servers:8,16,32")});
  const auto server_inst = named(server_specs);
  const auto server_runs = run_experiment(server_inst, opts);
  for (const auto& r : server_runs) ledger.record(r, server_inst.front().instance.config);

  auto means = [](const std::vector<ScenarioSpec>& specs, const std::vector<RunRecord>& runs,
                  bool time) {
    std::vector<double> out;
    for (const auto& s : specs) {
      double sum = 0.0;
      int n = 0;
      for (const auto& r : runs) {
        if (r.scenario_id != scenario_id(s)) continue;
        sum += time ? r.wall_time_s : r.avg_delay;
        ++n;
      }
      out.push_back(sum / n);
    }
    return out;
  };
  const auto chain_time = means(chain_specs, chain_runs, true);
  const auto chain_delay = means(chain_specs, chain_runs, false);
  const auto server_time = means(server_specs, server_runs, true);
  Outcome o;
  o.pass = inversions(chain_time) <= 1 && inversions(chain_delay) <= 1 &&
           inversions(server_time) <= 1;
  o.detail = "chain 1..9 time[ms] {" + join([&] {
               auto v = chain_time;
               for (auto& x : v) x *= 1000;
               return v;
             }(), "%.1f") +
             "} inversions " + std::to_string(inversions(chain_time)) + "; dp_hat {" +
             join(chain_delay, "%.1f") + "} inversions " +
             std::to_string(inversions(chain_delay)) + "; servers 8,16,32 time[ms] {" +
             join([&] {
               auto v = server_time;
               for (auto& x : v) x *= 1000;
               return v;
             }(), "%.1f") +
             "} inversions " + std::to_string(inversions(server_time));
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run(const std::string& cmd) { return std::system((cmd + " >/dev/null 2>&1").c_str()); }

Outcome cli_determinism(const std::string& cli, const fs::path& work) {
  const auto dir = work / "determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };
  const auto inst = dir / "inst.json";
  if (run(q(cli) + " gen --servers 16 --demands 30 --seed 77 -o " + q(inst)) != 0) {
    return {false, "gen failed"};
  }
  int identical = 0, total = 0;
  for (const std::string algo : {"pso", "random", "oracle"}) {
    const std::string flags =
        algo == "oracle" ? " --algo oracle" : " --algo " + algo + " --seed 5";
    const auto target = algo == "oracle" ? (fs::path(VNFSWARM_DATA_DIR) / "five_node.json") : inst;
    std::string outputs[2], traces[2];
    for (int k = 0; k < 2; ++k) {
      const auto out = dir / (algo + std::to_string(k) + ".json");
      const auto trace = dir / (algo + std::to_string(k) + ".csv");
      const std::string tflag = algo == "pso" ? " --trace " + q(trace) : "";
      if (run(q(cli) + " solve " + q(target) + flags + " -o " + q(out) + tflag) != 0) {
        return {false, algo + " solve failed"};
      }
      outputs[k] = slurp(out);
      traces[k] = algo == "pso" ? slurp(trace) : "";
    }
    ++total;
    if (!outputs[0].empty() && outputs[0] == outputs[1] && traces[0] == traces[1]) ++identical;
  }
  return {identical == total, std::to_string(identical) + "/" + std::to_string(total) +
                                  " solve invocations byte-identical (pso with trace, "
                                  "random, oracle)"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  fs::path work = fs::temp_directory_path() / "vnfswarm_acceptance";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--cli") cli = argv[i + 1];
    else if (key == "--work-dir") work = argv[i + 1];
  }
  fs::create_directories(work);

  report(1, "oracle equivalence on tiny instances", oracle_equivalence());
  report(2, "five-node fixture", five_node_fixture());
  const auto dominance = baseline_experiment();
  report(3, "link utilization vs random", reduction_outcome(dominance, true, 0.30));
  report(4, "path delay vs random", reduction_outcome(dominance, false, 0.0));
  const auto trend = trends();
  report(5, "monotone global-best traces",
         {ledger.non_monotone == 0, std::to_string(ledger.runs - ledger.non_monotone) + "/" +
                                        std::to_string(ledger.runs) + " PSO runs monotone"});
  report(6, "chain-length and server-count trends", trend);
  if (cli.empty()) {
    report(7, "CLI determinism", {false, "no --cli given"});
  } else {
    report(7, "CLI determinism", cli_determinism(cli, work));
  }
  report(8, "objective bounds",
         {ledger.out_of_bounds == 0,
          std::to_string(ledger.feasible - ledger.out_of_bounds) + "/" +
              std::to_string(ledger.feasible) + " feasible reports within (0, w1+w2+w3]"});
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
