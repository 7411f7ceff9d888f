#ifndef VNFSWARM_DECODER_HPP_
#define VNFSWARM_DECODER_HPP_

#include <span>
#include <utility>
#include <vector>

#include "vnfswarm/model.hpp"
#include "vnfswarm/problem.hpp"
#include "vnfswarm/routing.hpp"

namespace vnfswarm {

/// One VNF instance: a type running on a server. Shared by every demand
/// whose chain uses that type on that server.
struct VnfInstance {
  VnfTypeId type = 0;
  ServerId server = 0;

  auto operator<=>(const VnfInstance&) const = default;
};

/// A decoded solution. Demands appear in id order; `hosts[k][j]` hosts chain
/// position j of demand `demand_ids[k]` and `paths[k]` is that demand's walk.
struct Placement {
  std::vector<DemandId> demand_ids;
  std::vector<std::vector<ServerId>> hosts;
  std::vector<Path> paths;
  std::vector<VnfInstance> instances;  // sorted, unique
  std::vector<ServerId> used_servers;  // sorted, unique

  /// Throws InvalidInput for an unknown demand id.
  std::span<const ServerId> hosts_of(DemandId demand) const;
  const Path& path_of(DemandId demand) const;

  bool operator==(const Placement&) const = default;
};

/// Total chain length over `demands`.
std::size_t dimension(std::span<const Demand> demands);

/// Clamps a coordinate to [0, N) and floors it to a server id.
ServerId coordinate_to_server(double coordinate, std::size_t server_count);

/// Builds the placement for a flat host vector laid out in decoder order.
Placement place_hosts(std::span<const ServerId> flat_hosts, const Problem& problem);

/// Maps a particle position to a placement; coordinate k addresses the k-th
/// (demand, chain position) pair with demands in id order.
Placement decode(std::span<const double> position, const Problem& problem);
Placement decode(std::span<const double> position, const Topology& topology,
                 std::span<const Demand> demands);

}  // namespace vnfswarm

#endif  // VNFSWARM_DECODER_HPP_
