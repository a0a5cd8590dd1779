#pragma once

namespace exciton {

inline constexpr const char* version = "0.1.0";

} // namespace exciton
