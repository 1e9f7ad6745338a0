#include "sfc/controller.hpp"

#include <cmath>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

// The exact operation order matters: an n = 1 SFC must reproduce the L-AC
// arithmetic bit for bit, so both reduce to (coefficient * v).
double sfc_force(const SfcParams& p, double v) {
    return p.viscosity * std::pow(std::abs(v), p.exponent - 1.0) * v;
}

double nac_coeff(const NacParams& p, double f) {
    const double r = f / p.onset_force;
    return p.damping + p.extra_damping * (1.0 - std::exp(-r * r));
}

struct ForceVisitor {
    double v;
    double f;
    double operator()(const SfcParams& p) const { return sfc_force(p, v); }
    double operator()(const LacParams& p) const { return p.damping * v; }
    double operator()(const NacParams& p) const { return nac_coeff(p, f) * v; }
};

}  // namespace

double nonlinear_damping(const SfcParams& p, double v) {
    if (!std::isfinite(v)) throw DomainError("nonlinear_damping: velocity is not finite");
    return sfc_force(p, v);
}

double nac_damping_coeff(const NacParams& p, double f_ext) {
    if (!std::isfinite(f_ext)) throw DomainError("nac_damping_coeff: force is not finite");
    return nac_coeff(p, f_ext);
}

double damping_force(const ControllerParams& p, double v, double f_ext) {
    return std::visit(ForceVisitor{v, f_ext}, p);
}

ControllerState step_discrete(const ControllerParams& p, const ControllerState& s,
                              double f_ext, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("step_discrete: dt must be > 0");
    if (!std::isfinite(f_ext) || !std::isfinite(s.velocity) || !std::isfinite(s.position)) {
        throw DomainError("step_discrete: non-finite state or force");
    }
    ControllerState next;
    next.acceleration = (f_ext - damping_force(p, s.velocity, f_ext)) / mass_of(p);
    next.velocity = s.velocity + next.acceleration * dt;
    next.position = s.position + next.velocity * dt;
    next.time = s.time + dt;
    return next;
}

double apply_gain(const ControllerParams& p, double v) {
    return gain_of(p) * v;
}

double steady_internal_velocity(const ControllerParams& p, double f_ext) {
    struct {
        double f;
        double operator()(const SfcParams& q) const {
            return std::copysign(std::pow(std::abs(f) / q.viscosity, 1.0 / q.exponent), f);
        }
        double operator()(const LacParams& q) const { return f / q.damping; }
        // The coefficient depends on f only, so the balance is linear in v.
        double operator()(const NacParams& q) const { return f / nac_coeff(q, f); }
    } visitor{f_ext};
    return std::visit(visitor, p);
}

double steady_state_velocity(const ControllerParams& p, double f_ext) {
    return apply_gain(p, steady_internal_velocity(p, f_ext));
}

PhaseRate phase_derivative(const SfcParams& p, PhasePoint state) {
    return {state.velocity, -sfc_force(p, state.velocity) / p.mass};
}

double spatial_velocity_ratio(const SfcParams& p, double velocity) {
    return -(p.viscosity / p.mass) * std::pow(std::abs(velocity), p.exponent - 1.0);
}

double dissipated_power(const SfcParams& p, double v) {
    return sfc_force(p, v) * v;
}

double dissipated_power(const ControllerParams& p, double v, double f_ext) {
    return damping_force(p, v, f_ext) * v;
}

double kinetic_storage(const ControllerParams& p, double v) {
    return 0.5 * mass_of(p) * v * v;
}

}  // namespace sfc
