#pragma once

namespace lpfz {

inline constexpr const char* kVersion = "0.1.0";

} // namespace lpfz
