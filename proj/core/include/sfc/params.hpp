#pragma once

#include <string_view>
#include <variant>

namespace sfc {

/// Shear-thickening fluid controller: m x'' + mu |x'|^(n-1) x' = f, output g x'.
struct SfcParams {
    double mass = 1.0;       // kg
    double viscosity = 1.0;  // N (s/m)^n
    double exponent = 3.0;   // power-law n >= 1 (n = 1 is the linear case)
    double gain = 1.0;
};

/// Linear admittance: m x'' + mu x' = f, output g x'.
struct LacParams {
    double mass = 1.0;     // kg
    double damping = 1.0;  // N s/m
    double gain = 1.0;
};

/// Force-scheduled nonlinear admittance:
/// m x'' + (mu + alpha (1 - exp(-f^2 / sigma^2))) x' = f, output g x'.
struct NacParams {
    double mass = 1.0;           // kg
    double damping = 1.0;        // N s/m
    double extra_damping = 1.0;  // N s/m, reached as |f| >> onset_force
    double onset_force = 10.0;   // N
    double gain = 1.0;
};

using ControllerParams = std::variant<SfcParams, LacParams, NacParams>;

// Each throws DomainError naming the offending field.
void validate(const SfcParams& p);
void validate(const LacParams& p);
void validate(const NacParams& p);
void validate(const ControllerParams& p);

double mass_of(const ControllerParams& p);
double gain_of(const ControllerParams& p);

/// "sfc", "lac" or "nac".
std::string_view kind_name(const ControllerParams& p);

/// The L-AC that an n = 1 SFC degenerates into.
LacParams as_linear(const SfcParams& p);

}  // namespace sfc
