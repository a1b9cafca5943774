#pragma once

namespace weblog {
inline constexpr const char* kToolVersion = "0.1.0";
}
