#pragma once

#include <cstdio>
#include <string>

namespace expsearch {

// Fixed six-digit rendering used by every CSV writer.
inline std::string fmt6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace expsearch
