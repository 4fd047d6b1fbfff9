#pragma once

#include <string_view>

namespace edalab {

inline constexpr std::string_view kToolName = "eda-lab";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace edalab
