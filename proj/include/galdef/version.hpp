#pragma once

namespace galdef {

inline constexpr const char* kVersion = "0.1.0";

} // namespace galdef
