#include "sfc/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sfc/controller.hpp"
#include "sfc/describing.hpp"
#include "sfc/errors.hpp"

namespace sfc {
namespace {

constexpr double kMarginalBand = 0.05;
constexpr double kChatterFraction = 1e-6;
constexpr std::size_t kOscillationChanges = 4;
constexpr double kDivergenceFactor = 10.0;

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + " must be finite and > 0");
}

}  // namespace

ConstraintCheck make_check(std::string name, double value, double bound) {
    return {std::move(name), value, bound, value / bound < 1.0};
}

ConstraintReport make_report(std::vector<ConstraintCheck> checks) {
    if (checks.empty()) throw DomainError("make_report: no checks");
    ConstraintReport report;
    report.margin = -std::numeric_limits<double>::infinity();
    for (const auto& c : checks) {
        const double ratio = c.value / c.bound;
        if (ratio > report.margin || std::isnan(ratio)) {
            report.margin = ratio;
            report.bound_value = c.bound;
        }
    }
    report.satisfied = report.margin < 1.0;
    report.checks = std::move(checks);
    return report;
}

double max_sample_time(const SfcParams& p, double f_max) {
    require_positive(f_max, "max_sample_time: f_max");
    validate(p);
    const double n = p.exponent;
    return 2.0 * p.mass * std::pow(p.viscosity, -1.0 / n) / n * std::pow(f_max, (1.0 - n) / n);
}

double stable_step_limit(const ControllerParams& p, double f_max) {
    require_positive(f_max, "stable_step_limit: f_max");
    struct {
        double f;
        double operator()(const SfcParams& q) const { return max_sample_time(q, f); }
        double operator()(const LacParams& q) const { return 2.0 * q.mass / q.damping; }
        double operator()(const NacParams& q) const {
            return 2.0 * q.mass / nac_damping_coeff(q, f);
        }
    } visitor{f_max};
    return std::visit(visitor, p);
}

ConstraintReport sample_time_check(const SfcParams& p, double f_max, double dt) {
    require_positive(dt, "sample_time_check: dt");
    return make_report({make_check("sample_time", dt, max_sample_time(p, f_max))});
}

double max_bandwidth(const SfcParams& p, double dt, double f_ext, double f_max) {
    require_positive(dt, "max_bandwidth: dt");
    require_positive(f_ext, "max_bandwidth: f_ext");
    require_positive(f_max, "max_bandwidth: f_max");
    if (f_ext > f_max) throw DomainError("max_bandwidth: f_ext must not exceed f_max");
    const double n = p.exponent;
    return std::pow(2.0, (n + 1.0) / (2.0 * n)) * std::pow(psi(n), 1.0 / n) / (dt * n) *
           std::pow(f_ext / f_max, (n - 1.0) / n);
}

double coupling_factor(const SfcParams& p, double output_amplitude, double dt) {
    require_positive(output_amplitude, "coupling_factor: amplitude");
    require_positive(dt, "coupling_factor: dt");
    return p.viscosity * std::pow(output_amplitude, p.exponent - 1.0) * psi(p.exponent) /
           p.mass * dt;
}

double worst_case_amplitude(const SfcParams& p, double f_max) {
    require_positive(f_max, "worst_case_amplitude: f_max");
    return std::pow(f_max / p.viscosity, 1.0 / p.exponent);
}

ConstraintReport coupled_stability_check(const CoupledCheckInput& input) {
    validate(input.params);
    require_positive(input.omega, "coupled_stability_check: omega");
    const double q = coupling_factor(input.params, input.output_amplitude, input.dt);
    return make_report({make_check("Q", q, 1.0),
                        make_check("dt_omega", input.dt * input.omega, std::numbers::pi)});
}

double apparent_admittance_phase(double q, double dt_omega) {
    if (!(dt_omega > 0.0 && dt_omega < std::numbers::pi)) {
        throw DomainError("apparent_admittance_phase: dt*omega must lie in (0, pi)");
    }
    const double k = q - 1.0;
    return std::atan(k * std::sin(dt_omega) / (1.0 + k * std::cos(dt_omega))) - 0.5 * dt_omega;
}

double apparent_admittance_phase(const SfcParams& p, double output_amplitude, double omega,
                                 double dt) {
    return apparent_admittance_phase(coupling_factor(p, output_amplitude, dt), dt * omega);
}

EulerSensitivity euler_sensitivity(const SfcParams& p, double v, double delta, double f_ext) {
    return {(f_ext - nonlinear_damping(p, v)) / p.mass,
            (f_ext - nonlinear_damping(p, v + delta)) / p.mass};
}

OscillationReport detect_oscillation(std::span<const double> acceleration,
                                     std::span<const double> velocity, double steady_velocity) {
    OscillationReport report;
    const double limit = kDivergenceFactor * std::abs(steady_velocity);
    for (double v : velocity) {
        if (!std::isfinite(v) || (limit > 0.0 && std::abs(v) > limit)) {
            report.diverged = true;
            break;
        }
    }

    double peak = 0.0;
    for (double a : acceleration) {
        if (!std::isfinite(a)) {
            report.diverged = true;
            return report;
        }
        peak = std::max(peak, std::abs(a));
    }
    const double floor = kChatterFraction * peak;
    const std::size_t start = acceleration.size() - acceleration.size() / 4;
    int last_sign = 0;
    for (std::size_t i = start; i < acceleration.size(); ++i) {
        const double a = acceleration[i];
        if (std::abs(a) <= floor) continue;
        const int sign = a > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++report.sign_changes;
        last_sign = sign;
    }
    report.oscillatory = report.sign_changes >= kOscillationChanges;
    return report;
}

const char* to_string(SampleTimeVerdict v) {
    switch (v) {
        case SampleTimeVerdict::Converged: return "converged";
        case SampleTimeVerdict::Marginal: return "marginal";
        case SampleTimeVerdict::Oscillatory: return "oscillatory";
        case SampleTimeVerdict::Diverged: return "diverged";
    }
    return "unknown";
}

SampleTimeVerdict sample_time_verdict(double ratio, const OscillationReport& detector) {
    if (std::abs(ratio - 1.0) <= kMarginalBand) return SampleTimeVerdict::Marginal;
    if (detector.diverged) return SampleTimeVerdict::Diverged;
    if (detector.oscillatory) return SampleTimeVerdict::Oscillatory;
    return SampleTimeVerdict::Converged;
}

SampleTimeStudy study_sample_time(const SfcParams& p, double f_max, double dt, double duration,
                                  double step_time) {
    require_positive(dt, "study_sample_time: dt");
    require_positive(duration, "study_sample_time: duration");
    SampleTimeStudy study;
    study.bound = max_sample_time(p, f_max);
    study.ratio = dt / study.bound;

    const ControllerParams params = p;
    const auto steps = static_cast<std::size_t>(std::floor(duration / dt + 1e-9));
    std::vector<double> accel{0.0};
    std::vector<double> vel{0.0};
    ControllerState state;
    for (std::size_t k = 1; k <= steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double f = t >= step_time ? f_max : 0.0;
        state = step_discrete(params, state, f, dt);
        accel.push_back(state.acceleration);
        vel.push_back(state.velocity);
        if (!std::isfinite(state.velocity) || !std::isfinite(state.acceleration)) break;
    }
    study.detector = detect_oscillation(accel, vel, steady_internal_velocity(params, f_max));

    study.verdict = sample_time_verdict(study.ratio, study.detector);
    return study;
}

}  // namespace sfc
