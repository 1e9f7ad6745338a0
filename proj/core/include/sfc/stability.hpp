#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sfc/params.hpp"

namespace sfc {

/// One inequality value < bound.
struct ConstraintCheck {
    std::string name;
    double value = 0.0;
    double bound = 0.0;
    bool satisfied = false;  // value / bound < 1
};

/// Outcome of one or more checks. margin is the largest value/bound ratio and
/// bound_value the bound of that binding check, so satisfied <=> margin < 1.
struct ConstraintReport {
    bool satisfied = false;
    double bound_value = 0.0;
    double margin = 0.0;
    std::vector<ConstraintCheck> checks;
};

ConstraintReport make_report(std::vector<ConstraintCheck> checks);
ConstraintCheck make_check(std::string name, double value, double bound);

/// Largest forward-Euler sample time for a force range up to f_max:
/// 2 m mu^(-1/n) n^(-1) |f_max|^((1-n)/n).
double max_sample_time(const SfcParams& p, double f_max);

/// Same bound for any controller, 2 m / D'(v*) with v* the steady velocity at
/// f_max. Reduces to max_sample_time for the SFC.
double stable_step_limit(const ControllerParams& p, double f_max);

/// dt against max_sample_time(p, f_max).
ConstraintReport sample_time_check(const SfcParams& p, double f_max, double dt);

/// Bandwidth reachable at sample time dt when the force is f_ext out of f_max:
/// 2^((n+1)/(2n)) Psi(n)^(1/n) / (dt n) |f_ext / f_max|^((n-1)/n).
double max_bandwidth(const SfcParams& p, double dt, double f_ext, double f_max);

struct CoupledCheckInput {
    SfcParams params;
    double output_amplitude = 0.0;  // worst-case B [m/s]
    double omega = 0.0;             // interaction frequency [rad/s]
    double dt = 0.0;                // [s]
};

/// Q = mu B^(n-1) Psi(n) dt / m.
double coupling_factor(const SfcParams& p, double output_amplitude, double dt);

/// Largest steady internal velocity amplitude, (f_max / mu)^(1/n).
double worst_case_amplitude(const SfcParams& p, double f_max);

/// 0 < Q < 1 and 0 < dt w < pi. Checks are named "Q" and "dt_omega".
ConstraintReport coupled_stability_check(const CoupledCheckInput& input);

/// Phase of the apparent admittance (unit delay + zero-order hold):
/// atan((Q-1) sin(dt w) / (1 + (Q-1) cos(dt w))) - dt w / 2.
/// Throws DomainError unless 0 < dt w < pi.
double apparent_admittance_phase(const SfcParams& p, double output_amplitude, double omega,
                                 double dt);
double apparent_admittance_phase(double q, double dt_omega);

struct EulerSensitivity {
    double nominal = 0.0;    // m^-1 (f - D(v))
    double perturbed = 0.0;  // m^-1 (f - D(v + delta))
};

EulerSensitivity euler_sensitivity(const SfcParams& p, double v, double delta, double f_ext);

struct OscillationReport {
    std::size_t sign_changes = 0;
    bool oscillatory = false;
    bool diverged = false;
};

/// Sign changes of the acceleration over the trailing 25% of a trace. Samples
/// with |a| below 1e-6 of the trace's peak |a| are ignored (round-off chatter
/// around a fixed point). Four or more changes mark the trace oscillatory; any
/// |v| above 10 |steady_velocity| or a non-finite sample marks it diverged.
OscillationReport detect_oscillation(std::span<const double> acceleration,
                                     std::span<const double> velocity, double steady_velocity);

enum class SampleTimeVerdict { Converged, Marginal, Oscillatory, Diverged };

const char* to_string(SampleTimeVerdict v);

/// dt / bound within +-5% of 1 is Marginal whatever the detector says;
/// otherwise Diverged, Oscillatory or Converged from the detector.
SampleTimeVerdict sample_time_verdict(double ratio, const OscillationReport& detector);

struct SampleTimeStudy {
    double bound = 0.0;  // max_sample_time
    double ratio = 0.0;  // dt / bound
    OscillationReport detector;
    SampleTimeVerdict verdict = SampleTimeVerdict::Converged;
};

/// Steps the SFC from rest under a constant f_max switched on at step_time and
/// classifies the response with sample_time_verdict.
SampleTimeStudy study_sample_time(const SfcParams& p, double f_max, double dt,
                                  double duration = 1.0, double step_time = 0.1);

}  // namespace sfc
