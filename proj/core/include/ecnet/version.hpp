#pragma once

namespace ecnet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ecnet
