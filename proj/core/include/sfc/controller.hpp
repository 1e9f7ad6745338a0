#pragma once

#include "sfc/params.hpp"

namespace sfc {

/// Internal state of the virtual dynamics after a discrete step.
struct ControllerState {
    double velocity = 0.0;      // internal x' [m/s]
    double acceleration = 0.0;  // x'' [m/s^2]
    double position = 0.0;      // integrated x [m]
    double time = 0.0;          // [s]
};

/// Energy bookkeeping along a trajectory (joules).
struct EnergyLedger {
    double storage = 0.0;     // 1/2 m v^2
    double dissipated = 0.0;  // accumulated integral of D(v) v
    double work_in = 0.0;     // accumulated integral of v f_ext
};

/// Point (x1, x2) = (position, velocity) in the free-motion phase plane.
struct PhasePoint {
    double position = 0.0;
    double velocity = 0.0;
};

struct PhaseRate {
    double position_rate = 0.0;
    double velocity_rate = 0.0;
};

/// mu |v|^(n-1) v. Throws DomainError for non-finite v.
double nonlinear_damping(const SfcParams& p, double v);

/// mu_N + alpha_N (1 - exp(-f^2 / sigma_N^2)), in [mu_N, mu_N + alpha_N).
double nac_damping_coeff(const NacParams& p, double f_ext);

/// Damping force of any controller at internal velocity v. N-AC schedules its
/// coefficient on the force sample applied in the same step.
double damping_force(const ControllerParams& p, double v, double f_ext);

/// One forward-Euler update:
///   a(t) = (f(t) - D(v(t-1))) / m,  v(t) = v(t-1) + a dt,  x(t) = x(t-1) + v(t) dt.
/// Params are assumed valid; dt must be > 0 and the inputs finite.
ControllerState step_discrete(const ControllerParams& p, const ControllerState& s,
                              double f_ext, double dt);

/// Output (commanded) velocity g v.
double apply_gain(const ControllerParams& p, double v);

/// Internal velocity at which D(v) balances a constant force.
double steady_internal_velocity(const ControllerParams& p, double f_ext);

/// Output velocity at steady state under a constant force.
double steady_state_velocity(const ControllerParams& p, double f_ext);

/// Free-motion state equation: (x2, -(mu/m) |x2|^(n-1) x2).
PhaseRate phase_derivative(const SfcParams& p, PhasePoint state);

/// Slope of the free-motion trajectory, dx2/dx1 = -(mu/m) |x2|^(n-1).
double spatial_velocity_ratio(const SfcParams& p, double velocity);

/// mu |v|^(n-1) v^2 >= 0.
double dissipated_power(const SfcParams& p, double v);
double dissipated_power(const ControllerParams& p, double v, double f_ext);

double kinetic_storage(const ControllerParams& p, double v);

}  // namespace sfc
