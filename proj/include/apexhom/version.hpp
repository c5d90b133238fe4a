#pragma once

namespace apexhom {

inline constexpr const char* toolkit_version = "0.1.0";

} // namespace apexhom
