#include <gtest/gtest.h>

#include <functional>
#include <limits>

#include "fixtures.hpp"
#include "vnfswarm/random.hpp"
#include "vnfswarm/routing.hpp"

namespace vnfswarm {
namespace {

using namespace testing;

// Enumerates every walk of at most `max_hops` links and returns the minimum
// delay together with the lexicographically smallest node sequence among
// the minimum-delay walks.
std::pair<double, std::vector<ServerId>> brute_force_walk(const Topology& t, ServerId from,
                                                          ServerId to, std::size_t max_hops) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<ServerId> best_nodes;
  std::vector<ServerId> nodes{from};
  std::function<void(double)> visit = [&](double delay) {
    if (nodes.back() == to) {
      if (delay < best - 1e-9 || (std::abs(delay - best) <= 1e-9 && nodes < best_nodes)) {
        best = delay;
        best_nodes = nodes;
      }
    }
    if (nodes.size() > max_hops) return;
    for (const auto& l : t.links) {
      for (int side = 0; side < 2; ++side) {
        if (l.endpoints[side] != nodes.back()) continue;
        nodes.push_back(l.endpoints[1 - side]);
        visit(delay + l.delay);
        nodes.pop_back();
      }
    }
  };
  visit(0.0);
  return {best, best_nodes};
}

Topology line3() {
  Topology t;
  t.servers = {{0, 1}, {1, 1}, {2, 1}};
  t.links = {{0, {0, 1}, 1, 1.0}, {1, {1, 2}, 1, 1.0}};
  return t;
}

TEST(ShortestPath, FiveNodeAToD) {
  const auto seg = shortest_path(five_node_instance().topology, A, D);
  EXPECT_EQ(seg.nodes, (std::vector<ServerId>{A, C, D}));
  EXPECT_EQ(seg.links, (std::vector<LinkId>{0, 1}));
  EXPECT_DOUBLE_EQ(seg.delay, 2.0);
}

TEST(ShortestPath, SelfIsEmpty) {
  const auto topo = five_node_instance().topology;
  for (ServerId s = 0; s < 5; ++s) {
    const auto seg = shortest_path(topo, s, s);
    EXPECT_TRUE(seg.empty());
    EXPECT_EQ(seg.delay, 0.0);
    EXPECT_EQ(seg.nodes, std::vector<ServerId>{s});
  }
}

TEST(ShortestPath, LineGraphMatchesWalkEnumeration) {
  const auto t = line3();
  const auto [oracle_delay, oracle_nodes] = brute_force_walk(t, 0, 2, 3);
  EXPECT_EQ(oracle_delay, 2.0);
  const auto seg = shortest_path(t, 0, 2);
  EXPECT_EQ(seg.delay, oracle_delay);
  EXPECT_EQ(seg.nodes, oracle_nodes);
}

TEST(ShortestPath, UnreachableThrows) {
  Topology t;
  t.servers = {{0, 1}, {1, 1}, {2, 1}};
  t.links = {{0, {0, 1}, 1, 1.0}};
  EXPECT_THROW(shortest_path(t, 0, 2), NoPathError);
  const RoutingTable table(t);
  EXPECT_FALSE(table.reachable(0, 2));
  EXPECT_THROW(table.segment(2, 0), NoPathError);
}

TEST(ShortestPath, OutOfRangeIdThrows) {
  EXPECT_THROW(shortest_path(line3(), 0, 3), InvalidInput);
}

TEST(ShortestPath, ParallelLinksPreferLowerId) {
  Topology t;
  t.servers = {{0, 1}, {1, 1}};
  t.links = {{0, {0, 1}, 1, 2.0}, {1, {1, 0}, 1, 2.0}, {2, {0, 1}, 1, 1.5}};
  EXPECT_EQ(shortest_path(t, 0, 1).links, std::vector<LinkId>{2});
  t.links[2].delay = 2.0;
  EXPECT_EQ(shortest_path(t, 0, 1).links, std::vector<LinkId>{0});
}

TEST(ShortestPath, TieBreakPicksLexicographicallySmallest) {
  // Square 0-1-3 and 0-2-3 with equal delays: 0,1,3 wins.
  Topology t;
  t.servers = {{0, 1}, {1, 1}, {2, 1}, {3, 1}};
  t.links = {{0, {0, 2}, 1, 1.0}, {1, {2, 3}, 1, 1.0}, {2, {0, 1}, 1, 1.0}, {3, {1, 3}, 1, 1.0}};
  EXPECT_EQ(shortest_path(t, 0, 3).nodes, (std::vector<ServerId>{0, 1, 3}));
  EXPECT_EQ(shortest_path(t, 3, 0).nodes, (std::vector<ServerId>{3, 1, 0}));
}

Topology random_small_topology(std::uint64_t seed) {
  Rng rng(seed);
  Topology t;
  const int n = 3 + static_cast<int>(rng.below(4));
  for (ServerId s = 0; s < n; ++s) t.servers.push_back({s, 1.0});
  LinkId id = 0;
  for (ServerId s = 1; s < n; ++s) {
    const auto parent = static_cast<ServerId>(rng.below(static_cast<std::uint64_t>(s)));
    t.links.push_back({id++, {parent, s}, 1.0, 1.0 + static_cast<double>(rng.below(3))});
  }
  for (int extra = 0; extra < n; ++extra) {
    const auto a = static_cast<ServerId>(rng.below(static_cast<std::uint64_t>(n)));
    const auto b = static_cast<ServerId>(rng.below(static_cast<std::uint64_t>(n)));
    if (a == b) continue;
    t.links.push_back({id++, {a, b}, 1.0, 1.0 + static_cast<double>(rng.below(3))});
  }
  return t;
}

TEST(ShortestPath, RandomGraphsMatchWalkEnumeration) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto t = random_small_topology(seed);
    const RoutingTable table(t);
    const auto n = static_cast<ServerId>(t.servers.size());
    for (ServerId a = 0; a < n; ++a) {
      for (ServerId b = 0; b < n; ++b) {
        const auto [delay, nodes] = brute_force_walk(t, a, b, t.servers.size());
        const auto& seg = table.segment(a, b);
        EXPECT_EQ(seg.delay, delay) << "seed " << seed << " " << a << "->" << b;
        EXPECT_EQ(seg.nodes, nodes) << "seed " << seed << " " << a << "->" << b;
        EXPECT_EQ(shortest_path(t, a, b).nodes, seg.nodes);
      }
    }
  }
}

TEST(RoutingTable, SymmetryTriangleAndFloydWarshall) {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const auto t = random_small_topology(seed);
    const RoutingTable table(t);
    const auto fw = floyd_warshall(t);
    const auto n = static_cast<ServerId>(t.servers.size());
    for (ServerId a = 0; a < n; ++a) {
      for (ServerId b = 0; b < n; ++b) {
        EXPECT_NEAR(table.delay(a, b), fw[a][b], 1e-12);
        EXPECT_NEAR(table.delay(a, b), table.delay(b, a), 1e-12);
        for (ServerId c = 0; c < n; ++c) {
          EXPECT_LE(table.delay(a, c), table.delay(a, b) + table.delay(b, c) + 1e-12);
        }
      }
    }
  }
}

TEST(RoutingTable, Diameter) {
  EXPECT_EQ(RoutingTable(five_node_instance().topology).diameter(), 3.0);
}

TEST(StitchPath, Sc1BothOnC) {
  const auto inst = five_node_instance();
  const std::vector<ServerId> hosts{C, C};
  const auto p = stitch_path(inst.topology, inst.demands[0], hosts);
  EXPECT_EQ(p.demand, 0);
  EXPECT_EQ(p.nodes, (std::vector<ServerId>{A, C, D}));
  EXPECT_EQ(p.delay, 2.0);
}

TEST(StitchPath, Sc2ThroughCAndB) {
  const auto inst = five_node_instance();
  const std::vector<ServerId> hosts{C, B};
  const auto p = stitch_path(inst.topology, inst.demands[1], hosts);
  EXPECT_EQ(p.nodes, (std::vector<ServerId>{A, C, B, E}));
  EXPECT_EQ(p.links, (std::vector<LinkId>{0, 2, 3}));
  EXPECT_EQ(p.delay, 3.0);
}

TEST(StitchPath, SelfDemand) {
  const auto inst = five_node_instance();
  const Demand self{7, B, B, {F1}};
  const std::vector<ServerId> hosts{B};
  const auto p = stitch_path(inst.topology, self, hosts);
  EXPECT_EQ(p.nodes, std::vector<ServerId>{B});
  EXPECT_TRUE(p.links.empty());
  EXPECT_EQ(p.delay, 0.0);
}

TEST(StitchPath, BacktrackingRevisitsNodes) {
  const auto inst = five_node_instance();
  const std::vector<ServerId> hosts{E, C};
  const auto p = stitch_path(inst.topology, inst.demands[0], hosts);
  EXPECT_EQ(p.nodes, (std::vector<ServerId>{A, C, B, E, B, C, D}));
  EXPECT_EQ(p.delay, 6.0);
}

TEST(StitchPath, WrongHostCountThrows) {
  const auto inst = five_node_instance();
  const std::vector<ServerId> hosts{C};
  EXPECT_THROW(stitch_path(inst.topology, inst.demands[0], hosts), InvalidInput);
}

TEST(StitchPath, StructuralInvariantsOnRandomAssignments) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto t = random_small_topology(seed);
    const RoutingTable table(t);
    Rng rng(seed * 7);
    const auto n = t.servers.size();
    Demand d{0, static_cast<ServerId>(rng.below(n)), static_cast<ServerId>(rng.below(n)), {}};
    std::vector<ServerId> hosts;
    const auto k = 1 + rng.below(4);
    for (std::uint64_t j = 0; j < k; ++j) {
      d.chain.push_back(1);
      hosts.push_back(static_cast<ServerId>(rng.below(n)));
    }
    const auto p = stitch_path(table, d, hosts);
    ASSERT_EQ(p.nodes.front(), d.source);
    ASSERT_EQ(p.nodes.back(), d.destination);
    ASSERT_EQ(p.links.size() + 1, p.nodes.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < p.links.size(); ++i) {
      const auto& l = t.links[static_cast<std::size_t>(p.links[i])];
      const bool joins = (l.endpoints[0] == p.nodes[i] && l.endpoints[1] == p.nodes[i + 1]) ||
                         (l.endpoints[1] == p.nodes[i] && l.endpoints[0] == p.nodes[i + 1]);
      EXPECT_TRUE(joins);
      sum += l.delay;
    }
    EXPECT_EQ(sum, p.delay);
    // Hosts are met in chain order along the node sequence.
    std::size_t at = 0;
    for (const auto h : hosts) {
      while (at < p.nodes.size() && p.nodes[at] != h) ++at;
      ASSERT_LT(at, p.nodes.size()) << "host " << h << " missing or out of order";
    }
  }
}

}  // namespace
}  // namespace vnfswarm
