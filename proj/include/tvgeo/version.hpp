#pragma once

namespace tvgeo {

inline constexpr const char* kVersion = "tvgeo 1.0.0";

} // namespace tvgeo
