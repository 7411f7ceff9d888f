#ifndef VNFSWARM_ROUTING_HPP_
#define VNFSWARM_ROUTING_HPP_

#include <span>
#include <vector>

#include "vnfswarm/model.hpp"

namespace vnfswarm {

class NoPathError : public Error {
 public:
  using Error::Error;
};

/// A delay-shortest walk between two servers. `nodes` always starts with the
/// origin; a segment from a server to itself has one node and no links.
struct PathSegment {
  std::vector<ServerId> nodes;
  std::vector<LinkId> links;
  double delay = 0.0;

  bool empty() const { return links.empty(); }
};

/// The routed walk of one demand. Nodes may repeat when the stitched
/// segments backtrack.
struct Path {
  DemandId demand = 0;
  std::vector<ServerId> nodes;
  std::vector<LinkId> links;
  double delay = 0.0;

  bool operator==(const Path&) const = default;
};

/// Minimum-delay walk from `from` to `to`. Among equal-delay walks the one
/// with the lexicographically smallest node sequence wins; parallel links
/// tie-break on the lower link id. Throws NoPathError if unreachable.
PathSegment shortest_path(const Topology& topology, ServerId from, ServerId to);

/// All-pairs table of shortest_path results. Immutable after construction.
class RoutingTable {
 public:
  explicit RoutingTable(const Topology& topology);

  std::size_t server_count() const { return n_; }
  /// Throws NoPathError if the pair is disconnected.
  const PathSegment& segment(ServerId from, ServerId to) const;
  double delay(ServerId from, ServerId to) const;
  bool reachable(ServerId from, ServerId to) const;
  /// Largest finite pairwise delay.
  double diameter() const;
  double link_delay(LinkId link) const { return link_delays_[static_cast<std::size_t>(link)]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> link_delays_;
  std::vector<PathSegment> segments_;  // row-major n_ x n_
  std::vector<bool> reachable_;
};

/// Concatenates source -> hosts[0] -> ... -> hosts[k-1] -> destination.
Path stitch_path(const RoutingTable& routes, const Demand& demand,
                 std::span<const ServerId> hosts);
Path stitch_path(const Topology& topology, const Demand& demand,
                 std::span<const ServerId> hosts);

/// Overwrites `out` with the stitched walk, reusing its buffers.
void stitch_path_into(const RoutingTable& routes, const Demand& demand,
                      std::span<const ServerId> hosts, Path& out);

}  // namespace vnfswarm

#endif  // VNFSWARM_ROUTING_HPP_
