#include "sfc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

#include <Eigen/Dense>

#include "sfc/errors.hpp"
#include "sfc/format.hpp"
#include "sfc/stability.hpp"

namespace sfc {
namespace {

constexpr double kHalfPowerDb = 3.0102999566398120;  // 10 log10 2
constexpr double kTimeConstantFraction = 0.632;

void require_finite_state(const ControllerState& s, std::size_t step) {
    if (!std::isfinite(s.velocity) || !std::isfinite(s.acceleration) ||
        !std::isfinite(s.position)) {
        throw DivergenceError(step, "simulation diverged at step " + std::to_string(step));
    }
}

// Appends one row and accumulates the energy integrals against the previous row.
class TraceWriter {
public:
    TraceWriter(const ControllerParams& p, std::size_t rows, double dt) : p_(p), dt_(dt) {
        trace_.reserve(rows);
    }

    void first(double f, const ControllerState& s) {
        push(0.0, f, 0.0, s, 0.0, 0.0);
    }

    void next(double t, double f, double f_human, const ControllerState& s) {
        const std::size_t i = trace_.size() - 1;
        const double v0 = trace_.v_internal[i];
        const double f0 = trace_.f_ext[i];
        const double work = trace_.work_in[i] + 0.5 * dt_ * (v0 * f0 + s.velocity * f);
        const double lost = trace_.dissipated[i] +
                            0.5 * dt_ * (dissipated_power(p_, v0, f0) +
                                         dissipated_power(p_, s.velocity, f));
        push(t, f, f_human, s, work, lost);
    }

    SimTrace take() { return std::move(trace_); }
    const SimTrace& trace() const { return trace_; }

private:
    void push(double t, double f, double f_human, const ControllerState& s, double work,
              double lost) {
        trace_.time.push_back(t);
        trace_.f_ext.push_back(f);
        trace_.f_human.push_back(f_human);
        trace_.accel.push_back(s.acceleration);
        trace_.v_internal.push_back(s.velocity);
        trace_.v_output.push_back(apply_gain(p_, s.velocity));
        trace_.position.push_back(s.position);
        trace_.work_in.push_back(work);
        trace_.dissipated.push_back(lost);
        trace_.storage.push_back(kinetic_storage(p_, s.velocity));
    }

    const ControllerParams& p_;
    double dt_;
    SimTrace trace_;
};

}  // namespace

void validate(const SimConfig& config) {
    validate(config.controller);
    if (!(config.dt > 0.0) || !std::isfinite(config.dt)) throw DomainError("sim: dt must be > 0");
    if (!std::isfinite(config.duration) || config.duration < config.dt) {
        throw ConfigError("sim: duration must be >= dt");
    }
    const auto& s = config.initial_state;
    if (!std::isfinite(s.velocity) || !std::isfinite(s.position) || !std::isfinite(s.acceleration)) {
        throw DomainError("sim: initial state must be finite");
    }
}

std::size_t sample_count(const SimConfig& config) {
    // The epsilon keeps e.g. 1.0 / 0.002 from flooring to 499.
    return static_cast<std::size_t>(std::floor(config.duration / config.dt + 1e-9)) + 1;
}

void SimTrace::reserve(std::size_t n) {
    for (auto* c : {&time, &f_ext, &f_human, &accel, &v_internal, &v_output, &position, &work_in,
                    &dissipated, &storage}) {
        c->reserve(n);
    }
}

void SimTrace::write_csv(std::ostream& out) const {
    out << kCsvHeader << '\n';
    for (std::size_t i = 0; i < size(); ++i) {
        out << format_double(time[i]) << ',' << format_double(f_ext[i]) << ','
            << format_double(f_human[i]) << ',' << format_double(accel[i]) << ','
            << format_double(v_internal[i]) << ',' << format_double(v_output[i]) << ','
            << format_double(position[i]) << ',' << format_double(work_in[i]) << ','
            << format_double(dissipated[i]) << ',' << format_double(storage[i]) << '\n';
    }
}

SimTrace run(const SimConfig& config) {
    validate(config);
    const std::size_t rows = sample_count(config);
    TraceWriter writer(config.controller, rows, config.dt);

    ControllerState state = config.initial_state;
    state.time = 0.0;
    writer.first(config.input.at(0.0), state);
    for (std::size_t k = 1; k < rows; ++k) {
        const double t = static_cast<double>(k) * config.dt;
        const double f = config.input.at(t);
        state = step_discrete(config.controller, state, f, config.dt);
        state.time = t;
        require_finite_state(state, k);
        writer.next(t, f, 0.0, state);
    }
    return writer.take();
}

SimTrace run_coupled(const SimConfig& config, const HumanModel& human) {
    validate(config);
    if (!(human.mass > 0.0) || !(human.damping > 0.0) || !std::isfinite(human.mass) ||
        !std::isfinite(human.damping)) {
        throw DomainError("human model: mass and damping must be > 0");
    }
    const std::size_t rows = sample_count(config);
    TraceWriter writer(config.controller, rows, config.dt);

    ControllerState state = config.initial_state;
    state.time = 0.0;
    writer.first(human.intent.at(0.0), state);
    for (std::size_t k = 1; k < rows; ++k) {
        const double t = static_cast<double>(k) * config.dt;
        const auto& out = writer.trace().v_output;
        const double v1 = out[k - 1];
        const double accel_h = k >= 2 ? (v1 - out[k - 2]) / config.dt : 0.0;
        const double reaction = human.mass * accel_h + human.damping * v1;
        const double f = human.intent.at(t) - reaction;
        state = step_discrete(config.controller, state, f, config.dt);
        state.time = t;
        require_finite_state(state, k);
        writer.next(t, f, reaction, state);
    }
    return writer.take();
}

std::vector<double> passivity_tolerance(const SimTrace& trace, double mass) {
    std::vector<double> tol(trace.size(), 0.0);
    for (std::size_t k = 1; k < trace.size(); ++k) {
        const double dt = trace.time[k] - trace.time[k - 1];
        const double a = trace.accel[k];
        const double f = trace.f_ext[k];
        const double damping = f - mass * a;  // D(v[k-1]) recovered from the update
        tol[k] = tol[k - 1] + 0.5 * dt * std::abs(trace.v_internal[k - 1]) *
                                  std::abs(f - trace.f_ext[k - 1]) +
                 0.5 * dt * dt * std::abs(a) * std::abs(damping);
    }
    return tol;
}

PassivityResult check_passivity(const SimTrace& trace, double mass) {
    PassivityResult result;
    if (trace.size() == 0) return result;
    const auto tol = passivity_tolerance(trace, mass);
    result.worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < trace.size(); ++k) {
        const double dv = trace.storage[k] - trace.storage[0];
        // Round-off slack proportional to the magnitudes being compared.
        const double slack = 1e-12 * (std::abs(dv) + std::abs(trace.work_in[k]) + tol[k]) + 1e-300;
        const double excess = dv - trace.work_in[k] - tol[k];
        if (excess > result.worst_excess) {
            result.worst_excess = excess;
            result.worst_row = k;
        }
        if (excess > slack) result.satisfied = false;
    }
    return result;
}

double characteristic_time(const ControllerParams& p, double force_amplitude) {
    struct {
        double a;
        double operator()(const SfcParams& q) const { return time_constant_analytic(q, a); }
        double operator()(const LacParams& q) const { return q.mass / q.damping; }
        double operator()(const NacParams& q) const { return q.mass / q.damping; }
    } visitor{force_amplitude};
    return std::visit(visitor, p);
}

double sine_transient(const ControllerParams& p, double amplitude, double omega) {
    const double period = 2.0 * std::numbers::pi / omega;
    return std::max(5.0 * characteristic_time(p, amplitude), 10.0 * period);
}

SimConfig sine_config(const ControllerParams& p, double amplitude, double omega, double dt) {
    validate(p);
    if (!(amplitude > 0.0) || !(omega > 0.0)) throw DomainError("sine_config: amplitude and omega must be > 0");
    const double period = 2.0 * std::numbers::pi / omega;
    if (dt <= 0.0) {
        dt = std::min({1e-3, period / 1000.0, 0.5 * stable_step_limit(p, amplitude)});
    }
    SimConfig config;
    config.controller = p;
    config.input = InputSignal::sine(amplitude, omega);
    config.dt = dt;
    config.duration = sine_transient(p, amplitude, omega) + kProjectionPeriods * period;
    return config;
}

GainMeasurement measure_gain(const SimConfig& config) {
    const auto* sine = std::get_if<signal::Sine>(&config.input.kind());
    if (sine == nullptr) throw ConfigError("measure_gain: input must be a sine");
    const double period = 2.0 * std::numbers::pi / sine->omega;
    const double needed = sine_transient(config.controller, std::abs(sine->amplitude), sine->omega) +
                          kProjectionPeriods * period;
    if (config.duration < needed * (1.0 - 1e-9)) {
        throw ConfigError("measure_gain: run covers fewer than the transient plus " +
                          std::to_string(kProjectionPeriods) + " periods");
    }
    validate(config);

    // Stream the run instead of storing it: low-frequency sweeps take millions of steps.
    const std::size_t rows = sample_count(config);
    const double t_end = static_cast<double>(rows - 1) * config.dt;
    const double t_start = t_end - kProjectionPeriods * period;

    Eigen::Matrix3d normal = Eigen::Matrix3d::Zero();
    Eigen::Vector3d rhs = Eigen::Vector3d::Zero();
    ControllerState state = config.initial_state;
    state.time = 0.0;
    for (std::size_t k = 0; k < rows; ++k) {
        const double t = static_cast<double>(k) * config.dt;
        if (k > 0) {
            state = step_discrete(config.controller, state, config.input.at(t), config.dt);
            state.time = t;
            require_finite_state(state, k);
        }
        if (t < t_start) continue;
        const double wt = sine->omega * t;
        const Eigen::Vector3d row(std::sin(wt), std::cos(wt), 1.0);
        normal.noalias() += row * row.transpose();
        rhs.noalias() += row * state.velocity;
    }
    const Eigen::Vector3d coeff = normal.ldlt().solve(rhs);
    GainMeasurement m;
    m.output_amplitude = std::hypot(coeff[0], coeff[1]);
    m.gain = m.output_amplitude / std::abs(sine->amplitude);
    m.phase = std::atan2(coeff[1], coeff[0]);
    return m;
}

std::vector<double> default_omega_grid() {
    return log_grid(0.01, 100.0, 60);
}

std::vector<BodeCurve> numeric_bode(const ControllerParams& p, std::span<const double> amplitudes,
                                    std::span<const double> omega_grid) {
    if (amplitudes.empty() || omega_grid.empty()) throw DomainError("numeric_bode: empty grid");
    for (std::size_t i = 1; i < omega_grid.size(); ++i) {
        if (!(omega_grid[i] > omega_grid[i - 1])) {
            throw DomainError("numeric_bode: omega grid must be strictly increasing");
        }
    }
    std::vector<BodeCurve> curves;
    for (double a : amplitudes) {
        BodeCurve curve;
        curve.amplitude = a;
        for (double w : omega_grid) {
            const GainMeasurement m = measure_gain(sine_config(p, a, w));
            curve.points.push_back({w, 20.0 * std::log10(m.gain), m.phase});
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

double numeric_bandwidth(const BodeCurve& curve) {
    const auto& pts = curve.points;
    if (pts.size() < 2) throw NotFoundError("numeric_bandwidth: curve has fewer than two points");
    const double target = pts.front().gain_db - kHalfPowerDb;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].gain_db <= target) {
            const double x0 = std::log(pts[i - 1].omega);
            const double x1 = std::log(pts[i].omega);
            const double y0 = pts[i - 1].gain_db;
            const double y1 = pts[i].gain_db;
            return std::exp(x0 + (target - y0) * (x1 - x0) / (y1 - y0));
        }
    }
    throw NotFoundError("numeric_bandwidth: no -3 dB crossing in the swept range");
}

double numeric_time_constant(const SimTrace& trace, double onset) {
    const auto& v = trace.v_output;
    if (v.size() < 20) throw NotFoundError("numeric_time_constant: trace too short");
    const std::size_t tail = v.size() - v.size() / 10;
    double sum = 0.0;
    double lo = v[tail];
    double hi = v[tail];
    for (std::size_t i = tail; i < v.size(); ++i) {
        sum += v[i];
        lo = std::min(lo, v[i]);
        hi = std::max(hi, v[i]);
    }
    const double final_value = sum / static_cast<double>(v.size() - tail);
    if (final_value == 0.0 || (hi - lo) > 0.01 * std::abs(final_value)) {
        throw NotFoundError("numeric_time_constant: steady state not reached");
    }
    const double target = kTimeConstantFraction * final_value;
    const double sign = final_value > 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (sign * v[i] >= sign * target) {
            const double t0 = trace.time[i - 1];
            const double t1 = trace.time[i];
            const double frac = (target - v[i - 1]) / (v[i] - v[i - 1]);
            return t0 + frac * (t1 - t0) - onset;
        }
    }
    throw NotFoundError("numeric_time_constant: response never reaches 63.2%");
}

SimTrace step_response(const ControllerParams& p, double force, double dt, double duration) {
    SimConfig config;
    config.controller = p;
    config.input = InputSignal::step(force);
    config.dt = dt;
    config.duration = duration;
    return run(config);
}

void write_bode_csv(std::ostream& out, std::span<const BodeCurve> curves) {
    out << "amplitude,omega,gain_db,phase_deg\n";
    for (const auto& c : curves) {
        for (const auto& pt : c.points) {
            out << format_double(c.amplitude) << ',' << format_double(pt.omega) << ','
                << format_double(pt.gain_db) << ','
                << format_double(pt.phase * 180.0 / std::numbers::pi) << '\n';
        }
    }
}

}  // namespace sfc
