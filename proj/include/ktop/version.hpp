// version.hpp — Library version string recorded in run manifests and phase maps

#pragma once

#include <string_view>

namespace ktop {

inline constexpr std::string_view kVersion = "0.1.0";

} // namespace ktop
