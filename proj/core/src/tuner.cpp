#include "sfc/tuner.hpp"

#include <cmath>
#include <numbers>

#include "sfc/controller.hpp"
#include "sfc/describing.hpp"
#include "sfc/errors.hpp"

namespace sfc {
namespace {

constexpr double kVelocityTolerance = 1e-9;

void require_positive(double x, const char* field) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string("tuning requirement ") + field + " must be finite and > 0");
    }
}

double power_exponent(const TuningRequirements& req) {
    return std::log(req.impact_force / req.traction_force) /
           std::log(req.impact_velocity / req.traction_velocity);
}

}  // namespace

void validate(const TuningRequirements& req) {
    require_positive(req.traction_force, "traction_force");
    require_positive(req.impact_force, "impact_force");
    require_positive(req.traction_velocity, "traction_velocity");
    require_positive(req.impact_velocity, "impact_velocity");
    require_positive(req.traction_bandwidth, "traction_bandwidth");
    require_positive(req.dt, "dt");
    require_positive(req.mass, "mass");
    if (req.impact_velocity <= req.traction_velocity) {
        throw InfeasibleError("impact velocity must exceed traction velocity");
    }
    if (req.impact_force <= req.traction_force) {
        throw InfeasibleError("impact force must exceed traction force");
    }
}

TunedParams tune(const TuningRequirements& req) {
    validate(req);
    const double n = power_exponent(req);
    // n = 1 asks for a linear controller, which the power law cannot improve on.
    if (!(n > 1.0 + 1e-12)) {
        throw InfeasibleError("requirements give power-law exponent n = " + std::to_string(n) +
                              " (need n > 1)");
    }
    const double shape = (n - 1.0) / n;
    const double force_ratio = req.impact_force / req.traction_force;

    TunedParams out;
    double w_ease = req.traction_bandwidth;
    double w_max = w_ease * std::pow(force_ratio, shape);
    const double w_limit = std::pow(2.0, (1.0 + n) / (2.0 * n)) / (req.dt * n);
    if (w_max > w_limit) {
        w_ease = 2.0 / (req.dt * n) *
                 std::pow(req.traction_force / (std::numbers::sqrt2 * req.impact_force), shape);
        w_max = w_ease * std::pow(force_ratio, shape);
        out.bandwidth_adjusted = true;
    }

    const double mu = std::pow(req.mass * w_ease, n) / psi(n) *
                      std::pow(std::numbers::sqrt2 / req.traction_force, n - 1.0);
    const double g = req.traction_velocity * std::pow(mu / req.traction_force, 1.0 / n);

    out.params = SfcParams{req.mass, mu, n, g};
    out.traction_bandwidth_effective = w_ease;
    out.impact_bandwidth = w_max;
    return out;
}

ConstraintReport verify_tuning(const TunedParams& tuned, const TuningRequirements& req) {
    const ControllerParams p = tuned.params;
    const double v_ease = steady_state_velocity(p, req.traction_force);
    const double v_impact = steady_state_velocity(p, req.impact_force);
    const double rel = std::abs(v_ease - req.traction_velocity) / req.traction_velocity;
    return make_report({
        make_check("traction_velocity", rel, kVelocityTolerance),
        make_check("impact_velocity", v_impact, req.impact_velocity * (1.0 + kVelocityTolerance)),
        make_check("sample_time", req.dt, max_sample_time(tuned.params, req.impact_force)),
    });
}

}  // namespace sfc
