#include "sfc/presets.hpp"

#include <array>
#include <string>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

const std::array<Preset, 6> kPresets = {{
    {"fixed_sfc", SfcParams{1.0, 393.0, 3.0, 0.21}, 0.002},
    {"fixed_lac", LacParams{1.0, 17.0, 0.17}, 0.002},
    {"fixed_nac", NacParams{1.0, 15.5, 25.0, 20.0, 0.17}, 0.002},
    {"mobile_sfc", SfcParams{1.0, 20.0, 3.0, 0.04}, 0.02},
    {"mobile_lac", LacParams{1.0, 8.0, 0.045}, 0.02},
    {"mobile_nac", NacParams{1.0, 7.0, 7.0, 10.0, 0.45}, 0.02},
}};

}  // namespace

std::span<const Preset> builtin_presets() { return kPresets; }

const Preset& find_preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return p;
    }
    throw NotFoundError("unknown preset '" + std::string(name) + "'");
}

}  // namespace sfc
