// vnfswarm command-line tool.
//
//   vnfswarm gen    --servers 32 --demands 30 --seed 7 -o instance.json
//   vnfswarm gen    --sweep chain:1..9 -o sweep/
//   vnfswarm solve  instance.json [--algo pso|random|oracle] [--trace trace.csv]
//   vnfswarm oracle instance.json
//   vnfswarm bench  sweep/manifest.json --reps 20 --algos pso,random -o results/
//
// Exit status: 0 on success, 2 when the input fails validation, 1 otherwise.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>
#include "vnfswarm/harness.hpp"
#include "vnfswarm/io.hpp"
#include "vnfswarm/problem.hpp"
#include "vnfswarm/scenario.hpp"

namespace fs = std::filesystem;
using namespace vnfswarm;

namespace {

constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;

struct GenArgs {
  std::string spec_file;
  std::optional<int> servers, demands, chain_min, chain_max, vnf_types;
  std::optional<double> vnf_capacity, vnf_bandwidth, server_capacity, link_bandwidth,
      avg_degree, delay_min, delay_max, dp_max;
  std::optional<std::uint64_t> seed;
  bool clone_demands = false;
  std::vector<std::string> sweeps;
  std::string out;
};

// Flags shared by solve/oracle/bench that override instance config values.
struct SolverFlags {
  std::optional<int> particles, iterations;
  std::optional<double> w1, w2, w3, c1, c2, inertia_start, inertia_end, dp_max, penalty_weight,
      v_max_fraction;

  void add_to(CLI::App* app) {
    app->add_option("--particles", particles, "Swarm size");
    app->add_option("--iterations", iterations, "PSO iterations");
    app->add_option("--w1", w1, "Weight of used servers");
    app->add_option("--w2", w2, "Weight of link utilization");
    app->add_option("--w3", w3, "Weight of path delay");
    app->add_option("--c1", c1, "Cognitive acceleration");
    app->add_option("--c2", c2, "Social acceleration");
    app->add_option("--inertia-start", inertia_start, "Inertia at the first step");
    app->add_option("--inertia-end", inertia_end, "Inertia at the last step");
    app->add_option("--dp-max", dp_max, "Path delay bound");
    app->add_option("--penalty-weight", penalty_weight, "Constraint penalty weight");
    app->add_option("--v-max-fraction", v_max_fraction, "Velocity clamp as a fraction of N");
  }

  Json overrides() const {
    Json j = Json::object();
    auto put = [&j](const char* key, const auto& v) {
      if (v) j[key] = *v;
    };
    put("particles", particles);
    put("iterations", iterations);
    put("w1", w1);
    put("w2", w2);
    put("w3", w3);
    put("c1", c1);
    put("c2", c2);
    put("inertia_start", inertia_start);
    put("inertia_end", inertia_end);
    put("dp_max", dp_max);
    put("penalty_weight", penalty_weight);
    put("v_max_fraction", v_max_fraction);
    return j;
  }
};

struct SolveArgs {
  std::string instance;
  std::string algo = "pso";
  std::optional<std::uint64_t> seed;
  int attempts = 100;
  std::string out;
  std::string trace;
  SolverFlags solver;
};

struct BenchArgs {
  std::string manifest;
  int reps = 20;
  std::string algos = "pso,random";
  std::uint64_t seed = 1;
  int workers = 1;
  int attempts = 100;
  std::string out = "results";
  std::string trace_dir;
  SolverFlags solver;
};

std::optional<std::uint64_t> env_seed() {
  if (const char* s = std::getenv("VNFSWARM_SEED"); s != nullptr && *s != '\0') {
    return std::stoull(s);
  }
  return std::nullopt;
}

int run_gen(const GenArgs& args) {
  ScenarioSpec base;
  if (!args.spec_file.empty()) base = scenario_from_json(read_json_file(args.spec_file));
  if (args.servers) base.servers = *args.servers;
  if (args.demands) base.demand_count = *args.demands;
  if (args.chain_min) base.chain_min = *args.chain_min;
  if (args.chain_max) base.chain_max = *args.chain_max;
  if (args.vnf_types) base.vnf_types = *args.vnf_types;
  if (args.vnf_capacity) base.vnf_capacity = *args.vnf_capacity;
  if (args.vnf_bandwidth) base.vnf_bandwidth = *args.vnf_bandwidth;
  if (args.server_capacity) base.server_capacity = *args.server_capacity;
  if (args.link_bandwidth) base.link_bandwidth = *args.link_bandwidth;
  if (args.avg_degree) base.avg_degree = *args.avg_degree;
  if (args.delay_min) base.delay_min = *args.delay_min;
  if (args.delay_max) base.delay_max = *args.delay_max;
  if (args.dp_max) base.dp_max = *args.dp_max;
  if (args.clone_demands) base.clone_demands = true;
  if (args.seed) {
    base.seed = *args.seed;
  } else if (const auto s = env_seed()) {
    base.seed = *s;
  }

  std::vector<SweepAxis> axes;
  for (const auto& s : args.sweeps) axes.push_back(parse_sweep(s));
  const auto specs = grid(base, axes);
  // Validate everything before touching the filesystem.
  for (const auto& spec : specs) {
    if (const auto errors = validate_spec(spec); !errors.empty()) {
      std::cerr << "error: invalid scenario " << scenario_id(spec) << ":\n";
      for (const auto& e : errors) std::cerr << "  " << e << '\n';
      return kExitInvalid;
    }
  }

  if (axes.empty()) {
    const fs::path out = args.out.empty() ? fs::path("instance.json") : fs::path(args.out);
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    write_file_atomic(out, dump(to_json(generate(specs.front()))));
    std::cout << out.string() << '\n';
    return 0;
  }

  const fs::path dir = args.out.empty() ? fs::path("instances") : fs::path(args.out);
  fs::create_directories(dir);
  Manifest manifest;
  for (const auto& spec : specs) {
    const auto id = scenario_id(spec);
    const auto file = id + ".json";
    write_file_atomic(dir / file, dump(to_json(generate(spec))));
    manifest.entries.push_back({id, file, spec});
  }
  write_file_atomic(dir / "manifest.json", dump(to_json(manifest)));
  std::cout << (dir / "manifest.json").string() << '\n';
  return 0;
}

int report_invalid(const InvalidInstance& e) {
  std::cerr << "error: instance failed validation:\n";
  for (const auto& v : e.report().violations) {
    std::cerr << "  [" << to_string(v.kind) << "] " << v.message << '\n';
  }
  return kExitInvalid;
}

int run_solve(const SolveArgs& args) {
  const auto algorithm = parse_algorithm(args.algo);
  auto instance = load_instance(args.instance);
  auto config = config_from_json(args.solver.overrides(), instance.config);
  if (args.seed) {
    config.seed = *args.seed;
  } else if (const auto s = env_seed()) {
    config.seed = *s;
  }
  if (const auto errors = validate_config(config); !errors.empty()) {
    std::cerr << "error: invalid solver configuration:\n";
    for (const auto& e : errors) std::cerr << "  " << e << '\n';
    return kExitInvalid;
  }
  const Problem problem(std::move(instance));
  const auto result = solve(problem, config, algorithm, config.seed, args.attempts);

  Json doc{{"algorithm", to_string(algorithm)},
           {"instance", problem.topology().name},
           {"seed", config.seed},
           {"config", to_json(config)},
           {"placement", to_json(result.placement)},
           {"report", to_json(result.report)}};
  const auto text = dump(doc);
  if (!args.trace.empty()) {
    if (algorithm != Algorithm::kPso) {
      std::cerr << "warning: --trace only applies to pso; writing an empty trace\n";
    }
    write_file_atomic(args.trace, trace_to_csv(result.trace));
  }
  if (args.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(args.out, text);
  }
  return 0;
}

std::vector<Algorithm> parse_algorithms(const std::string& list) {
  std::vector<Algorithm> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_algorithm(item));
  }
  if (out.empty()) throw InvalidInput("--algos is empty");
  return out;
}

int run_bench(const BenchArgs& args) {
  const fs::path manifest_path(args.manifest);
  const auto manifest = load_manifest(manifest_path);
  ExperimentOptions options;
  options.algorithms = parse_algorithms(args.algos);
  options.repetitions = args.reps;
  options.master_seed = args.seed;
  options.workers = args.workers;
  options.random_attempts = args.attempts;
  if (const auto o = args.solver.overrides(); !o.empty()) options.config_overrides = o;
  if (!args.trace_dir.empty()) {
    fs::create_directories(args.trace_dir);
    options.trace_dir = fs::path(args.trace_dir);
  }

  const fs::path out(args.out);
  fs::create_directories(out);
  ResultsStore store(out / "results.csv");
  const auto records = run_experiment(manifest, manifest_path.parent_path(), options, &store);
  store.commit();

  const auto summary = aggregate(records);
  write_file_atomic(out / "summary.json", dump(summary_to_json(summary, manifest)));
  write_file_atomic(out / "chain_vs_time.tsv", plot_tsv(summary, manifest, "chain", "wall_time_s"));
  write_file_atomic(out / "chain_vs_delay.tsv", plot_tsv(summary, manifest, "chain", "dp_hat"));
  write_file_atomic(out / "servers_vs_time.tsv",
                    plot_tsv(summary, manifest, "servers", "wall_time_s"));
  write_file_atomic(out / "requested_vs_time.tsv",
                    plot_tsv(summary, manifest, "requested", "wall_time_s"));
  write_file_atomic(out / "capacity_vs_time.tsv",
                    plot_tsv(summary, manifest, "vnf_capacity", "wall_time_s"));
  write_file_atomic(out / "demands_vs_util.tsv", plot_tsv(summary, manifest, "demands", "U"));
  write_file_atomic(out / "demands_vs_servers.tsv", plot_tsv(summary, manifest, "demands", "T"));

  for (const auto& red : summary.reductions) {
    std::cout << red.scenario_id;
    if (red.utilization) std::cout << "  U reduction " << *red.utilization * 100 << "%";
    if (red.avg_delay) std::cout << "  dp_hat reduction " << *red.avg_delay * 100 << "%";
    std::cout << '\n';
  }
  std::cout << (out / "results.csv").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint VNF placement and service-chain routing with particle swarm optimization"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random instances or a sweep of them");
  gen_cmd->add_option("--spec", gen.spec_file, "Scenario spec JSON used as the template");
  gen_cmd->add_option("--servers", gen.servers, "Number of servers");
  gen_cmd->add_option("--demands", gen.demands, "Number of demands");
  gen_cmd->add_option("--chain-min", gen.chain_min, "Shortest chain");
  gen_cmd->add_option("--chain-max", gen.chain_max, "Longest chain");
  gen_cmd->add_option("--vnf-types", gen.vnf_types, "Number of VNF types");
  gen_cmd->add_option("--vnf-capacity", gen.vnf_capacity, "Processing capacity of each VNF");
  gen_cmd->add_option("--vnf-bandwidth", gen.vnf_bandwidth, "Bandwidth of each VNF");
  gen_cmd->add_option("--server-capacity", gen.server_capacity, "Capacity of each server");
  gen_cmd->add_option("--link-bandwidth", gen.link_bandwidth, "Bandwidth of each link");
  gen_cmd->add_option("--avg-degree", gen.avg_degree, "Target average node degree");
  gen_cmd->add_option("--delay-min", gen.delay_min, "Smallest link delay");
  gen_cmd->add_option("--delay-max", gen.delay_max, "Largest link delay");
  gen_cmd->add_option("--dp-max", gen.dp_max, "Path delay bound (default: worst case)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--clone-demands", gen.clone_demands, "Give every demand the same chain");
  gen_cmd->add_option("--sweep", gen.sweeps, "Sweep axis, e.g. chain:1..9 or servers:8,16,32");
  gen_cmd->add_option("-o,--out", gen.out, "Output file, or directory when sweeping");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance", solve_args.instance, "Instance JSON")->required();
  solve_cmd->add_option("--algo", solve_args.algo, "pso, random or oracle")
      ->check(CLI::IsMember({"pso", "random", "oracle"}));
  solve_cmd->add_option("--seed", solve_args.seed, "Random seed");
  solve_cmd->add_option("--attempts", solve_args.attempts, "Draws for the random baseline");
  solve_cmd->add_option("-o,--out", solve_args.out, "Placement JSON (default stdout)");
  solve_cmd->add_option("--trace", solve_args.trace, "Convergence trace CSV");
  solve_args.solver.add_to(solve_cmd);

  SolveArgs oracle_args;
  oracle_args.algo = "oracle";
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum (same as solve --algo oracle)");
  oracle_cmd->add_option("instance", oracle_args.instance, "Instance JSON")->required();
  oracle_cmd->add_option("-o,--out", oracle_args.out, "Placement JSON (default stdout)");
  oracle_args.solver.add_to(oracle_cmd);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over a sweep manifest");
  bench_cmd->add_option("manifest", bench.manifest, "Manifest JSON written by gen")->required();
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per instance and algorithm");
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms");
  bench_cmd->add_option("--seed", bench.seed, "Master seed");
  bench_cmd->add_option("--workers", bench.workers, "Parallel runs (1 keeps timings clean)");
  bench_cmd->add_option("--attempts", bench.attempts, "Draws for the random baseline");
  bench_cmd->add_option("-o,--out-dir", bench.out, "Output directory");
  bench_cmd->add_option("--trace-dir", bench.trace_dir, "Directory for PSO traces");
  bench.solver.add_to(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (oracle_cmd->parsed()) return run_solve(oracle_args);
    if (bench_cmd->parsed()) return run_bench(bench);
  } catch (const InvalidInstance& e) {
    return report_invalid(e);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
