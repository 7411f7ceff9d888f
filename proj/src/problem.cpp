#include "vnfswarm/problem.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace vnfswarm {
namespace {

std::string summarize(const ValidationReport& report) {
  std::string msg = "invalid instance:";
  for (const auto& v : report.violations) {
    msg += "\n  [" + std::string(to_string(v.kind)) + "] " + v.message;
  }
  return msg;
}

const Instance& checked(const Instance& instance) {
  auto report = validate_instance(instance.topology, instance.catalog, instance.demands);
  if (!report.ok()) throw InvalidInstance(std::move(report));
  return instance;
}

}  // namespace

InvalidInstance::InvalidInstance(ValidationReport report)
    : InvalidInput(summarize(report)), report_(std::move(report)) {}

Problem::Problem(Instance instance)
    : instance_(std::move(instance)), routes_(checked(instance_).topology) {
  const auto& demands = instance_.demands;
  ordered_.resize(demands.size());
  std::iota(ordered_.begin(), ordered_.end(), std::size_t{0});
  std::stable_sort(ordered_.begin(), ordered_.end(), [&](std::size_t a, std::size_t b) {
    return demands[a].id < demands[b].id;
  });

  const auto& types = instance_.catalog.types;
  for (const auto idx : ordered_) {
    const auto& d = demands[idx];
    offsets_.push_back(dimension_);
    dimension_ += d.chain.size();
    std::vector<std::size_t> chain;
    std::set<std::size_t> distinct;
    for (const auto type : d.chain) {
      const auto it = std::find_if(types.begin(), types.end(),
                                   [type](const VnfTypeSpec& t) { return t.id == type; });
      const auto pos = static_cast<std::size_t>(it - types.begin());
      chain.push_back(pos);
      distinct.insert(pos);
    }
    double bw = 0.0;
    for (const auto pos : distinct) bw += types[pos].bandwidth;
    chain_types_.push_back(std::move(chain));
    chain_bandwidth_.push_back(bw);
  }
}

}  // namespace vnfswarm
