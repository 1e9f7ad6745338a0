#pragma once

#include <span>
#include <string_view>

#include "sfc/params.hpp"

namespace sfc {

/// Named controller parameter set together with the sample time it was
/// designed for.
struct Preset {
    std::string_view name;
    ControllerParams params;
    double dt = 0.0;  // [s]
};

/// fixed_{sfc,lac,nac} (2 ms) and mobile_{sfc,lac,nac} (20 ms).
std::span<const Preset> builtin_presets();

/// Throws NotFoundError for unknown names.
const Preset& find_preset(std::string_view name);

}  // namespace sfc
