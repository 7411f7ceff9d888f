// Thin bindings: instances, specs and results cross the boundary as JSON
// text; the Python package converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "vnfswarm/baselines.hpp"
#include "vnfswarm/harness.hpp"

namespace py = pybind11;
using namespace vnfswarm;

namespace {

Instance parse_instance(const std::string& text) {
  try {
    return instance_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(e.what());
  }
}

SolverConfig merged_config(const Instance& inst, const std::optional<std::string>& overrides) {
  if (!overrides) return inst.config;
  return config_from_json(Json::parse(*overrides), inst.config);
}

std::string result_json(const SolveResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    trace.push_back({{"iteration", t.iteration},
                     {"global_best_fitness", t.global_best_fitness},
                     {"feasible", t.feasible},
                     {"T", t.used_servers},
                     {"U", t.utilization},
                     {"dp_hat", t.avg_delay}});
  }
  return Json{{"placement", to_json(r.placement)},
              {"report", to_json(r.report)},
              {"trace", trace}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "VNF placement and chaining with a discrete particle swarm";

  // Translators registered later are tried first, so bases go first.
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto invalid = py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<InvalidInstance>(m, "InvalidInstanceError", invalid.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<SpaceTooLargeError>(m, "SpaceTooLargeError", base.ptr());

  m.def("validate", [](const std::string& text) {
    const auto inst = parse_instance(text);
    std::vector<std::string> messages;
    for (const auto& v : validate_instance(inst.topology, inst.catalog, inst.demands).violations) {
      messages.push_back(std::string(to_string(v.kind)) + ": " + v.message);
    }
    for (auto& msg : validate_config(inst.config)) messages.push_back("config: " + msg);
    return messages;
  });

  m.def("generate", [](const std::string& spec_text) {
    return dump(to_json(generate(scenario_from_json(Json::parse(spec_text)))));
  });

  m.def("dimension",
        [](const std::string& text) { return dimension(parse_instance(text).demands); });

  m.def("decode", [](const std::string& text, const std::vector<double>& position) {
    const Problem problem(parse_instance(text));
    return to_json(decode(position, problem)).dump();
  });

  m.def(
      "fitness",
      [](const std::string& text, const std::vector<double>& position,
         const std::optional<std::string>& config) {
        const Problem problem(parse_instance(text));
        return to_json(fitness(position, problem, merged_config(problem.instance(), config)))
            .dump();
      },
      py::arg("instance"), py::arg("position"), py::arg("config") = py::none());

  m.def(
      "solve",
      [](const std::string& text, const std::string& algorithm, std::optional<std::uint64_t> seed,
         int attempts, const std::optional<std::string>& config) {
        const Problem problem(parse_instance(text));
        auto cfg = merged_config(problem.instance(), config);
        if (seed) cfg.seed = *seed;
        SolveResult result;
        {
          py::gil_scoped_release release;
          result = solve(problem, cfg, parse_algorithm(algorithm), cfg.seed, attempts);
        }
        return result_json(result);
      },
      py::arg("instance"), py::arg("algorithm") = "pso", py::arg("seed") = py::none(),
      py::arg("attempts") = 100, py::arg("config") = py::none());
}
