#pragma once

namespace graphlines {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace graphlines
