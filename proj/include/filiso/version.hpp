#pragma once

namespace filiso {
inline constexpr const char* kVersion = "0.1.0";
}
