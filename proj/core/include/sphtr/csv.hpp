#pragma once

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

namespace sphtr {

// Shortest round-trippable decimal form. All CSV/report writers go through
// this so identical runs produce identical bytes.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  // Prefer a shorter form when it round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[40];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

}  // namespace sphtr
