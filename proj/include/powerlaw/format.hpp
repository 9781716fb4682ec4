#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace powerlaw {

/// Numeric text output at 12 significant digits with a '.' decimal separator
/// regardless of locale (snprintf in the "C" locale).
inline std::string fmt_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

/// Nearest double representable by a 12-significant-digit decimal. Applied to
/// values before JSON serialization so files honor the same output precision
/// as CSV.
inline double round_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

}  // namespace powerlaw
