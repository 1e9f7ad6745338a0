#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "sfc/controller.hpp"
#include "sfc/describing.hpp"
#include "sfc/params.hpp"
#include "sfc/signal.hpp"

namespace sfc {

struct SimConfig {
    ControllerParams controller;
    InputSignal input;
    double dt = 0.002;       // [s]
    double duration = 1.0;   // [s]
    ControllerState initial_state;
};

/// Throws DomainError/ConfigError on invalid settings.
void validate(const SimConfig& config);

/// Number of samples a run produces, floor(duration / dt) + 1.
std::size_t sample_count(const SimConfig& config);

/// Uniformly sampled simulation output, one row per dt (row 0 is the initial
/// state, with zero acceleration).
struct SimTrace {
    std::vector<double> time;        // [s]
    std::vector<double> f_ext;       // force applied to the controller [N]
    std::vector<double> f_human;     // human reaction force, 0 for open-loop runs [N]
    std::vector<double> accel;       // [m/s^2]
    std::vector<double> v_internal;  // [m/s]
    std::vector<double> v_output;    // [m/s]
    std::vector<double> position;    // [m]
    std::vector<double> work_in;     // [J]
    std::vector<double> dissipated;  // [J]
    std::vector<double> storage;     // [J]

    std::size_t size() const { return time.size(); }
    void reserve(std::size_t n);

    static constexpr std::string_view kCsvHeader =
        "time,f_ext,f_human,accel,v_internal,v_output,position,work_in,dissipated,storage";

    void write_csv(std::ostream& out) const;
};

/// Second-order human arm, Z_h(s) = 1 / (m_h s + b_h), pushing with an intent
/// force and reacting to the robot's output velocity.
struct HumanModel {
    double mass = 1.0;     // m_h [kg]
    double damping = 10.0; // b_h [N s/m]
    InputSignal intent;    // exogenous force [N]
};

/// Open-loop forward-Euler run driven by config.input. Work and dissipation
/// are accumulated with the trapezoidal rule. Throws DivergenceError naming
/// the first step whose state is not finite.
SimTrace run(const SimConfig& config);

/// Coupled run: at step k the controller sees
///   f_ext = intent(t) - (m_h (v_o[k-1] - v_o[k-2]) / dt + b_h v_o[k-1])
/// where v_o is the output velocity; the difference term is zero at k = 1.
/// config.input is ignored in favour of human.intent.
SimTrace run_coupled(const SimConfig& config, const HumanModel& human);

/// Upper bound on the discretization energy error of a trace, per row:
///   sum over steps of dt/2 |v[k-1]| |f[k] - f[k-1]| + dt^2/2 |a[k]| |f[k] - m a[k]|.
/// The continuous balance storage - storage0 <= work_in holds up to this term.
std::vector<double> passivity_tolerance(const SimTrace& trace, double mass);

struct PassivityResult {
    double worst_excess = 0.0;  // max over rows of (dV - work_in - tolerance)
    std::size_t worst_row = 0;
    bool satisfied = true;
};

PassivityResult check_passivity(const SimTrace& trace, double mass);

/// Slowest characteristic time of a controller driven at force amplitude A:
/// the analytic SFC time constant, m/mu for L-AC, m/mu_N for N-AC.
double characteristic_time(const ControllerParams& p, double force_amplitude);

struct GainMeasurement {
    double output_amplitude = 0.0;  // B, fundamental of v_internal [m/s]
    double gain = 0.0;              // B / A
    double phase = 0.0;             // [rad]
};

inline constexpr int kProjectionPeriods = 10;

/// Transient skipped before projecting: max(5 characteristic times, 10 periods).
double sine_transient(const ControllerParams& p, double amplitude, double omega);

/// Sine run long enough for measure_gain. dt <= 0 picks
/// min(1 ms, period / 1000, half the stable step at A).
SimConfig sine_config(const ControllerParams& p, double amplitude, double omega, double dt = 0.0);

/// Fits v_internal = a sin(wt) + b cos(wt) + c over the last 10 complete periods.
/// Throws ConfigError if the input is not a sine or the run is too short.
GainMeasurement measure_gain(const SimConfig& config);

/// Default sweep grid: 60 log-spaced points on [0.01, 100] rad/s.
std::vector<double> default_omega_grid();

std::vector<BodeCurve> numeric_bode(const ControllerParams& p, std::span<const double> amplitudes,
                                    std::span<const double> omega_grid);

/// First frequency where the gain falls 3.0103 dB below the lowest-frequency
/// point, interpolated linearly in log omega. Throws NotFoundError.
double numeric_bandwidth(const BodeCurve& curve);

/// Time for v_output to reach 63.2% of its final value (mean of the last 10%),
/// measured from `onset`. Throws NotFoundError if the last 10% spreads by more
/// than 1% of the final value.
double numeric_time_constant(const SimTrace& trace, double onset = 0.0);

/// Step response from rest.
SimTrace step_response(const ControllerParams& p, double force, double dt, double duration);

/// Writes Bode curves as CSV "amplitude,omega,gain_db,phase_deg".
void write_bode_csv(std::ostream& out, std::span<const BodeCurve> curves);

}  // namespace sfc
