#pragma once

namespace atsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace atsim
