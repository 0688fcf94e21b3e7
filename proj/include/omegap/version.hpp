#pragma once

namespace omegap {
inline constexpr const char* kVersion = "0.1.0";
}
