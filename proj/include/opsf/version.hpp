#pragma once

namespace opsf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace opsf
