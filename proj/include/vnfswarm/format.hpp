#ifndef VNFSWARM_FORMAT_HPP_
#define VNFSWARM_FORMAT_HPP_

#include <string>

namespace vnfswarm {

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

}  // namespace vnfswarm

#endif  // VNFSWARM_FORMAT_HPP_
