#pragma once

#include <cstdio>
#include <string>

namespace ultrapar {

// Fixed 12-significant-digit rendering used by every report.
inline std::string fmt12(double v) {
  if (v == 0) v = 0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace ultrapar
