#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "vnfswarm/io.hpp"
#include "vnfswarm/problem.hpp"

namespace vnfswarm {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("vnfswarm_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(InstanceJson, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    ScenarioSpec spec;
    spec.seed = seed;
    spec.servers = 3 + static_cast<int>(seed % 10);
    spec.avg_degree = 2.0;
    spec.demand_count = static_cast<int>(seed % 7);
    auto inst = generate(spec);
    inst.config.w1 = 0.2;
    inst.config.particles = 7;
    const auto doc = to_json(inst);
    const auto back = instance_from_json(doc);
    EXPECT_EQ(dump(to_json(back)), dump(doc));
    EXPECT_EQ(Json::parse(dump(doc)), doc);
  }
}

TEST(InstanceJson, RejectsUnknownKeys) {
  auto doc = to_json(testing::five_node_instance());
  doc["extra"] = 1;
  EXPECT_THROW(instance_from_json(doc), FormatError);
  doc = to_json(testing::five_node_instance());
  doc["topology"]["servers"][0]["cpu"] = 1;
  EXPECT_THROW(instance_from_json(doc), FormatError);
  doc = to_json(testing::five_node_instance());
  doc["config"]["particle"] = 5;
  EXPECT_THROW(instance_from_json(doc), FormatError);
}

TEST(InstanceJson, MissingAndMistypedKeys) {
  auto doc = to_json(testing::five_node_instance());
  doc.erase("demands");
  EXPECT_THROW(instance_from_json(doc), FormatError);
  doc = to_json(testing::five_node_instance());
  doc["topology"]["links"][0]["delay"] = "fast";
  EXPECT_THROW(instance_from_json(doc), FormatError);
  doc = to_json(testing::five_node_instance());
  doc["topology"]["links"][0]["endpoints"] = {0, 1, 2};
  EXPECT_THROW(instance_from_json(doc), FormatError);
}

TEST(InstanceJson, ConfigIsOptionalAndOverlays) {
  auto doc = to_json(testing::five_node_instance());
  doc.erase("config");
  EXPECT_EQ(dump(to_json(instance_from_json(doc).config)), dump(to_json(SolverConfig{})));

  SolverConfig base;
  base.particles = 50;
  const auto c = config_from_json(Json{{"w1", 0.7}, {"iterations", 3}}, base);
  EXPECT_EQ(c.w1, 0.7);
  EXPECT_EQ(c.iterations, 3);
  EXPECT_EQ(c.particles, 50);
  EXPECT_EQ(c.w2, 0.25);
}

TEST(InstanceJson, FixtureFileMatchesBuiltInstance) {
  const auto loaded = load_instance(fs::path(VNFSWARM_DATA_DIR) / "five_node.json");
  EXPECT_EQ(dump(to_json(loaded)), dump(to_json(testing::five_node_instance())));
}

TEST(Files, LoadErrors) {
  const auto dir = scratch("load");
  EXPECT_THROW(load_instance(dir / "missing.json"), FormatError);
  std::ofstream(dir / "bad.json") << "{ not json";
  EXPECT_THROW(load_instance(dir / "bad.json"), FormatError);
}

TEST(Files, AtomicWriteReplacesAndLeavesNoTemp) {
  const auto dir = scratch("atomic");
  const auto file = dir / "out.json";
  write_file_atomic(file, "first\n");
  write_file_atomic(file, "second\n");
  std::ifstream in(file);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, "second\n");
  EXPECT_FALSE(fs::exists(dir / "out.json.tmp"));
  EXPECT_THROW(write_file_atomic(dir / "no" / "such" / "dir.json", "x"), Error);
}

TEST(Manifest, RoundTrip) {
  Manifest m;
  ScenarioSpec spec;
  spec.seed = 9;
  m.entries.push_back({scenario_id(spec), scenario_id(spec) + ".json", spec});
  spec.servers = 32;
  m.entries.push_back({scenario_id(spec), scenario_id(spec) + ".json", spec});
  const auto dir = scratch("manifest");
  write_file_atomic(dir / "manifest.json", dump(to_json(m)));
  const auto back = load_manifest(dir / "manifest.json");
  ASSERT_EQ(back.entries.size(), 2u);
  EXPECT_EQ(back.entries[1].id, m.entries[1].id);
  EXPECT_EQ(back.entries[1].spec, m.entries[1].spec);
  EXPECT_THROW(manifest_from_json(Json{{"entries", Json::array()}}), FormatError);
}

TEST(ReportJson, Keys) {
  const Problem problem(testing::five_node_instance());
  const auto placement =
      place_hosts(std::vector<ServerId>{testing::C, testing::C, testing::C, testing::B}, problem);
  const auto r = to_json(evaluate(placement, problem, problem.config()));
  for (const auto* key : {"objective", "T", "U", "dp_hat", "penalty", "penalized_fitness",
                          "feasible", "violations"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  const auto p = to_json(placement);
  EXPECT_EQ(p["used_servers"], (Json{1, 2}));
  EXPECT_EQ(p["paths"][0]["nodes"], (Json{0, 2, 3}));
}

}  // namespace
}  // namespace vnfswarm
