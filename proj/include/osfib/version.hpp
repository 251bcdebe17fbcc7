#pragma once

namespace osfib {

inline constexpr const char* kVersion = "0.1.0";

} // namespace osfib
