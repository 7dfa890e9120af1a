#pragma once

#include <charconv>
#include <cmath>
#include <string>

namespace udnsim {

// Shortest round-trip decimal for CSV and config echo. Integral values take
// a plain integer path so 10 prints as "10" and 1e7 as "10000000", never in
// exponent form.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0.0 ? "-inf" : "inf";
  if (v == std::rint(v) && std::fabs(v) < 1.0e15) {
    return std::to_string(static_cast<long long>(v));
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace udnsim
