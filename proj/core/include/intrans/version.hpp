#pragma once

namespace intrans {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace intrans
