#pragma once

#include <array>
#include <charconv>
#include <string>

namespace chainscope {

/// Shortest decimal that round-trips to the same double.
inline std::string format_real(double x) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

}  // namespace chainscope
