#pragma once

#include <array>
#include <charconv>
#include <cstdio>
#include <string>

namespace omegap::detail {

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

/// Fixed 17-significant-digit form used by the CSV writer.
inline std::string format_double_17(double v) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return std::string(buf.data(), n > 0 ? static_cast<std::size_t>(n) : 0);
}

}  // namespace omegap::detail
