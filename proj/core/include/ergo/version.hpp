#pragma once

namespace ergo {

inline constexpr const char* version = "0.1.0";

}  // namespace ergo
