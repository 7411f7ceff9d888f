#include "vnfswarm/routing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace vnfswarm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Arc {
  ServerId to;
  LinkId link;
  double delay;
};

using Adjacency = std::vector<std::vector<Arc>>;

Adjacency build_adjacency(const Topology& topology) {
  Adjacency adj(topology.servers.size());
  const auto n = static_cast<ServerId>(topology.servers.size());
  for (const auto& l : topology.links) {
    const auto [a, b] = l.endpoints;
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidInput("link " + std::to_string(l.id) + " references an unknown server");
    }
    adj[a].push_back({b, l.id, l.delay});
    adj[b].push_back({a, l.id, l.delay});
  }
  // Neighbour order (node id, then link id) drives the lexicographic tie-break.
  for (auto& arcs : adj) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
      return x.to != y.to ? x.to < y.to : x.link < y.link;
    });
  }
  return adj;
}

std::vector<double> distances_to(const Adjacency& adj, ServerId target) {
  std::vector<double> dist(adj.size(), kInf);
  using Item = std::pair<double, ServerId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[target] = 0.0;
  queue.emplace(0.0, target);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const auto& arc : adj[u]) {
      const double nd = d + arc.delay;
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        queue.emplace(nd, arc.to);
      }
    }
  }
  return dist;
}

bool on_shortest(double arc_delay, double dist_next, double dist_here) {
  const double slack = 1e-12 * std::max(1.0, std::abs(dist_here));
  return arc_delay + dist_next <= dist_here + slack;
}

// Walks from `from` towards the target of `dist`, always taking the smallest
// (node id, link id) arc that stays on some shortest walk.
PathSegment greedy_walk(const Adjacency& adj, const std::vector<double>& dist,
                        ServerId from, ServerId to) {
  PathSegment seg;
  seg.nodes.push_back(from);
  ServerId u = from;
  const std::size_t max_hops = adj.size();
  while (u != to) {
    const Arc* chosen = nullptr;
    for (const auto& arc : adj[u]) {
      if (std::isfinite(dist[arc.to]) && on_shortest(arc.delay, dist[arc.to], dist[u]) &&
          dist[arc.to] < dist[u]) {
        chosen = &arc;
        break;
      }
    }
    if (chosen == nullptr || seg.links.size() >= max_hops) {
      throw NoPathError("routing stalled between servers " + std::to_string(from) +
                        " and " + std::to_string(to));
    }
    seg.links.push_back(chosen->link);
    seg.nodes.push_back(chosen->to);
    seg.delay += chosen->delay;
    u = chosen->to;
  }
  return seg;
}

void check_server(std::size_t n, ServerId id) {
  if (id < 0 || static_cast<std::size_t>(id) >= n) {
    throw InvalidInput("server id " + std::to_string(id) + " is out of range");
  }
}

}  // namespace

PathSegment shortest_path(const Topology& topology, ServerId from, ServerId to) {
  const auto n = topology.servers.size();
  check_server(n, from);
  check_server(n, to);
  const auto adj = build_adjacency(topology);
  const auto dist = distances_to(adj, to);
  if (!std::isfinite(dist[from])) {
    throw NoPathError("no path between servers " + std::to_string(from) + " and " +
                      std::to_string(to));
  }
  return greedy_walk(adj, dist, from, to);
}

RoutingTable::RoutingTable(const Topology& topology)
    : n_(topology.servers.size()), segments_(n_ * n_), reachable_(n_ * n_, false) {
  link_delays_.reserve(topology.links.size());
  for (const auto& l : topology.links) link_delays_.push_back(l.delay);
  const auto adj = build_adjacency(topology);
  for (std::size_t t = 0; t < n_; ++t) {
    const auto target = static_cast<ServerId>(t);
    const auto dist = distances_to(adj, target);
    for (std::size_t s = 0; s < n_; ++s) {
      if (!std::isfinite(dist[s])) continue;
      segments_[s * n_ + t] = greedy_walk(adj, dist, static_cast<ServerId>(s), target);
      reachable_[s * n_ + t] = true;
    }
  }
}

const PathSegment& RoutingTable::segment(ServerId from, ServerId to) const {
  check_server(n_, from);
  check_server(n_, to);
  const auto idx = static_cast<std::size_t>(from) * n_ + static_cast<std::size_t>(to);
  if (!reachable_[idx]) {
    throw NoPathError("no path between servers " + std::to_string(from) + " and " +
                      std::to_string(to));
  }
  return segments_[idx];
}

double RoutingTable::delay(ServerId from, ServerId to) const {
  return segment(from, to).delay;
}

bool RoutingTable::reachable(ServerId from, ServerId to) const {
  check_server(n_, from);
  check_server(n_, to);
  return reachable_[static_cast<std::size_t>(from) * n_ + static_cast<std::size_t>(to)];
}

double RoutingTable::diameter() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (reachable_[i]) worst = std::max(worst, segments_[i].delay);
  }
  return worst;
}

void stitch_path_into(const RoutingTable& routes, const Demand& demand,
                      std::span<const ServerId> hosts, Path& out) {
  out.demand = demand.id;
  out.nodes.clear();
  out.links.clear();
  out.delay = 0.0;
  out.nodes.push_back(demand.source);
  ServerId at = demand.source;
  auto append = [&](ServerId next) {
    const auto& seg = routes.segment(at, next);
    out.nodes.insert(out.nodes.end(), seg.nodes.begin() + 1, seg.nodes.end());
    for (const auto link : seg.links) {
      out.links.push_back(link);
      out.delay += routes.link_delay(link);
    }
    at = next;
  };
  for (const auto host : hosts) append(host);
  append(demand.destination);
}

Path stitch_path(const RoutingTable& routes, const Demand& demand,
                 std::span<const ServerId> hosts) {
  if (hosts.size() != demand.chain.size()) {
    throw InvalidInput("demand " + std::to_string(demand.id) + " expects " +
                       std::to_string(demand.chain.size()) + " hosts, got " +
                       std::to_string(hosts.size()));
  }
  Path path;
  stitch_path_into(routes, demand, hosts, path);
  return path;
}

Path stitch_path(const Topology& topology, const Demand& demand,
                 std::span<const ServerId> hosts) {
  return stitch_path(RoutingTable(topology), demand, hosts);
}

}  // namespace vnfswarm
