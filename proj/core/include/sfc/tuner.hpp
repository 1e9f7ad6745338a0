#pragma once

#include "sfc/params.hpp"
#include "sfc/stability.hpp"

namespace sfc {

/// Interaction requirements the SFC parameters are tuned against.
struct TuningRequirements {
    double traction_force = 0.0;     // f_ease, max traction force [N]
    double impact_force = 0.0;       // f_interf, max impact force [N]
    double traction_velocity = 0.0;  // expected output velocity under traction [m/s]
    double impact_velocity = 0.0;    // acceptable output velocity under impact [m/s]
    double traction_bandwidth = 0.0; // [rad/s]
    double dt = 0.0;                 // sample time [s]
    double mass = 1.0;               // chosen virtual inertia [kg]
};

struct TunedParams {
    SfcParams params;
    double traction_bandwidth_effective = 0.0;  // [rad/s], lowered by the fallback
    bool bandwidth_adjusted = false;
    double impact_bandwidth = 0.0;  // omega_c_max at the effective traction bandwidth
};

/// Throws InfeasibleError when the request has no valid SFC (orderings violated,
/// or the exponent comes out <= 1), DomainError for non-positive fields.
void validate(const TuningRequirements& req);

/// Computes n, mu and g from the requirements:
///   n        = log(f_interf / f_ease) / log(v_c / v_d)
///   w_max    = w_ease (f_interf / f_ease)^((n-1)/n)
///   if w_max > 2^((1+n)/(2n)) / (dt n):
///       w_ease = (2 / (dt n)) (f_ease / (sqrt2 f_interf))^((n-1)/n)
///   mu       = (m w_ease)^n / Psi(n) (sqrt2 / f_ease)^(n-1)
///   g        = v_d (mu / f_ease)^(1/n)
/// The exponent is kept as a real number.
TunedParams tune(const TuningRequirements& req);

/// Checks "traction_velocity" (relative error of the steady output at f_ease
/// against 1e-9), "impact_velocity" (steady output at f_interf against
/// v_c (1 + 1e-9)) and "sample_time" (dt against max_sample_time at f_interf).
ConstraintReport verify_tuning(const TunedParams& tuned, const TuningRequirements& req);

}  // namespace sfc
