#include "vnfswarm/format.hpp"

#include <charconv>

namespace vnfswarm {

std::string format_number(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace vnfswarm
