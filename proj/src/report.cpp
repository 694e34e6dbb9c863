#include "mcvc/report.hpp"

namespace mcvc {

std::string vertex_set_to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

}  // namespace mcvc
