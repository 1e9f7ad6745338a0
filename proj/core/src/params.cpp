#include "sfc/params.hpp"

#include <cmath>
#include <string>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

void require_positive(double value, const char* owner, const char* field) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw DomainError(std::string(owner) + "." + field + " must be finite and > 0");
    }
}

}  // namespace

void validate(const SfcParams& p) {
    require_positive(p.mass, "sfc", "mass");
    require_positive(p.viscosity, "sfc", "viscosity");
    require_positive(p.gain, "sfc", "gain");
    if (!std::isfinite(p.exponent) || p.exponent < 1.0) {
        throw DomainError("sfc.exponent must be finite and >= 1");
    }
}

void validate(const LacParams& p) {
    require_positive(p.mass, "lac", "mass");
    require_positive(p.damping, "lac", "damping");
    require_positive(p.gain, "lac", "gain");
}

void validate(const NacParams& p) {
    require_positive(p.mass, "nac", "mass");
    require_positive(p.damping, "nac", "damping");
    require_positive(p.extra_damping, "nac", "extra_damping");
    require_positive(p.onset_force, "nac", "onset_force");
    require_positive(p.gain, "nac", "gain");
}

void validate(const ControllerParams& p) {
    std::visit([](const auto& q) { validate(q); }, p);
}

double mass_of(const ControllerParams& p) {
    return std::visit([](const auto& q) { return q.mass; }, p);
}

double gain_of(const ControllerParams& p) {
    return std::visit([](const auto& q) { return q.gain; }, p);
}

std::string_view kind_name(const ControllerParams& p) {
    switch (p.index()) {
        case 0: return "sfc";
        case 1: return "lac";
        default: return "nac";
    }
}

LacParams as_linear(const SfcParams& p) {
    return LacParams{p.mass, p.viscosity, p.gain};
}

}  // namespace sfc
