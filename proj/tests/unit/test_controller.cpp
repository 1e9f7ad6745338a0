#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "sfc/controller.hpp"
#include "sfc/errors.hpp"
#include "sfc/presets.hpp"

using namespace sfc;

namespace {

const SfcParams kCubic{1.0, 1.0, 3.0, 1.0};

SfcParams fixed_sfc() { return std::get<SfcParams>(find_preset("fixed_sfc").params); }
NacParams fixed_nac() { return std::get<NacParams>(find_preset("fixed_nac").params); }

}  // namespace

TEST(Params, ValidationRejectsNonPositiveFields) {
    EXPECT_NO_THROW(validate(SfcParams{1.0, 1.0, 1.0, 1.0}));
    EXPECT_THROW(validate(SfcParams{0.0, 1.0, 3.0, 1.0}), DomainError);
    EXPECT_THROW(validate(SfcParams{1.0, -1.0, 3.0, 1.0}), DomainError);
    EXPECT_THROW(validate(SfcParams{1.0, 1.0, 0.5, 1.0}), DomainError);
    EXPECT_THROW(validate(SfcParams{1.0, 1.0, 3.0, 0.0}), DomainError);
    EXPECT_THROW(validate(LacParams{1.0, 0.0, 1.0}), DomainError);
    EXPECT_THROW(validate(NacParams{1.0, 1.0, 0.0, 1.0, 1.0}), DomainError);
    EXPECT_THROW(validate(SfcParams{1.0, std::nan(""), 3.0, 1.0}), DomainError);
}

TEST(NonlinearDamping, Examples) {
    EXPECT_EQ(nonlinear_damping(kCubic, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(nonlinear_damping(kCubic, 2.0), 8.0);
    EXPECT_DOUBLE_EQ(nonlinear_damping(SfcParams{1.0, 1.0, 1.0, 1.0}, 0.5), 0.5);
    EXPECT_THROW(nonlinear_damping(kCubic, std::numeric_limits<double>::infinity()), DomainError);
}

TEST(NonlinearDamping, OddAndIncreasing) {
    for (double n : {1.0, 1.5, 2.0, 3.0, 7.0}) {
        const SfcParams p{1.0, 2.5, n, 1.0};
        double prev = -std::numeric_limits<double>::infinity();
        for (double v = -3.0; v <= 3.0; v += 0.01) {
            EXPECT_EQ(nonlinear_damping(p, -v), -nonlinear_damping(p, v));
            const double d = nonlinear_damping(p, v);
            EXPECT_GT(d, prev);
            prev = d;
        }
    }
}

TEST(NonlinearDamping, SubQuadraticExponentAtRestIsZero) {
    EXPECT_EQ(nonlinear_damping(SfcParams{1.0, 1.0, 1.5, 1.0}, 0.0), 0.0);
    EXPECT_EQ(dissipated_power(SfcParams{1.0, 1.0, 1.2, 1.0}, 0.0), 0.0);
}

TEST(NacDamping, Examples) {
    const NacParams p = fixed_nac();
    EXPECT_DOUBLE_EQ(nac_damping_coeff(p, 0.0), 15.5);
    EXPECT_NEAR(nac_damping_coeff(p, 1e6), 40.5, 1e-12);
    // 15.5 + 25 (1 - exp(-25/400))
    EXPECT_NEAR(nac_damping_coeff(p, 5.0), 15.5 + 25.0 * (1.0 - std::exp(-0.0625)), 1e-12);
    EXPECT_NEAR(nac_damping_coeff(p, 5.0), 17.015, 5e-4);
    EXPECT_THROW(nac_damping_coeff(p, std::nan("")), DomainError);
    for (double f = -100.0; f <= 100.0; f += 0.5) {
        const double c = nac_damping_coeff(p, f);
        EXPECT_GE(c, 15.5);
        EXPECT_LT(c, 40.5);
    }
}

TEST(StepDiscrete, Examples) {
    ControllerState rest;
    ControllerState s = step_discrete(kCubic, rest, 0.0, 0.002);
    EXPECT_EQ(s.acceleration, 0.0);
    EXPECT_EQ(s.velocity, 0.0);

    s = step_discrete(kCubic, rest, 10.0, 0.002);
    EXPECT_DOUBLE_EQ(s.acceleration, 10.0);
    EXPECT_DOUBLE_EQ(s.velocity, 0.02);
    EXPECT_DOUBLE_EQ(s.position, 0.02 * 0.002);
    EXPECT_DOUBLE_EQ(s.time, 0.002);
}

TEST(StepDiscrete, FixedPointIsExact) {
    // v = (f/mu)^(1/n) balances the force; check a = 0 to round-off.
    const SfcParams p = fixed_sfc();
    ControllerState s;
    s.velocity = std::cbrt(5.0 / 393.0);
    const ControllerState next = step_discrete(p, s, 5.0, 0.002);
    EXPECT_NEAR(next.acceleration, 0.0, 1e-13);
    EXPECT_NEAR(next.velocity, s.velocity, 1e-15);
}

TEST(StepDiscrete, NacUsesCurrentForceAndPreviousVelocity) {
    const NacParams p = fixed_nac();
    ControllerState s;
    s.velocity = 0.3;
    const double f = 12.0;
    const ControllerState next = step_discrete(p, s, f, 0.002);
    EXPECT_DOUBLE_EQ(next.acceleration, (f - nac_damping_coeff(p, f) * 0.3) / p.mass);
}

TEST(StepDiscrete, RejectsBadInputs) {
    EXPECT_THROW(step_discrete(kCubic, ControllerState{}, 1.0, 0.0), DomainError);
    EXPECT_THROW(step_discrete(kCubic, ControllerState{}, std::nan(""), 0.001), DomainError);
}

TEST(Degeneration, UnitExponentMatchesLinearBitForBit) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    const SfcParams s{1.3, 4.2, 1.0, 0.37};
    const LacParams l = as_linear(s);
    ControllerState a;
    ControllerState b;
    for (int k = 0; k < 5000; ++k) {
        const double f = u(rng);
        a = step_discrete(s, a, f, 0.003);
        b = step_discrete(l, b, f, 0.003);
        ASSERT_EQ(a.velocity, b.velocity);
        ASSERT_EQ(a.acceleration, b.acceleration);
        ASSERT_EQ(a.position, b.position);
        ASSERT_EQ(apply_gain(s, a.velocity), apply_gain(l, b.velocity));
    }
}

TEST(ApplyGain, Examples) {
    EXPECT_NEAR(apply_gain(SfcParams{1.0, 1.0, 3.0, 0.21}, 0.2335), 0.04903, 1e-5);
    EXPECT_EQ(apply_gain(LacParams{1.0, 1.0, 1.0}, 7.0), 7.0);
    EXPECT_NEAR(apply_gain(LacParams{1.0, 17.0, 0.17}, 50.0 / 17.0), 0.5, 1e-15);
}

TEST(SteadyState, PresetValues) {
    EXPECT_NEAR(steady_state_velocity(fixed_sfc(), 5.0), 0.21 * std::cbrt(5.0 / 393.0), 1e-15);
    EXPECT_NEAR(steady_state_velocity(fixed_sfc(), 5.0), 0.0490, 1e-4);
    EXPECT_NEAR(steady_state_velocity(find_preset("fixed_lac").params, 5.0), 0.05, 1e-15);
    // Coefficient 17.015 then 5 / 17.015 * 0.17.
    EXPECT_NEAR(steady_state_velocity(fixed_nac(), 5.0), 0.04996, 1e-5);
    EXPECT_LT(steady_state_velocity(fixed_sfc(), -5.0), 0.0);
    EXPECT_EQ(steady_state_velocity(fixed_sfc(), 0.0), 0.0);
}

TEST(SteadyState, NacSolvesBalance) {
    const NacParams p = fixed_nac();
    for (double f : {-40.0, -3.0, 0.5, 5.0, 20.0, 70.0}) {
        const double v = steady_internal_velocity(p, f);
        EXPECT_NEAR(f - nac_damping_coeff(p, f) * v, 0.0, 1e-12 * std::abs(f));
    }
}

TEST(PhasePlane, Examples) {
    PhaseRate r = phase_derivative(kCubic, {0.0, 0.0});
    EXPECT_EQ(r.position_rate, 0.0);
    EXPECT_EQ(r.velocity_rate, 0.0);
    r = phase_derivative(kCubic, {1.0, 2.0});
    EXPECT_DOUBLE_EQ(r.position_rate, 2.0);
    EXPECT_DOUBLE_EQ(r.velocity_rate, -8.0);
    r = phase_derivative(SfcParams{1.0, 1.0, 1.0, 1.0}, {0.0, 2.0});
    EXPECT_DOUBLE_EQ(r.velocity_rate, -2.0);
}

TEST(PhasePlane, SpatialRatio) {
    EXPECT_EQ(spatial_velocity_ratio(kCubic, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(spatial_velocity_ratio(kCubic, 2.0), -4.0);
    const SfcParams linear{1.0, 1.0, 1.0, 1.0};
    for (double x2 = 0.05; x2 < 5.0; x2 += 0.05) {
        const double nl = std::abs(spatial_velocity_ratio(kCubic, x2));
        const double l = std::abs(spatial_velocity_ratio(linear, x2));
        if (x2 >= 1.0) EXPECT_GE(nl, l) << x2;
        if (x2 <= 1.0) EXPECT_LE(nl, l) << x2;
    }
}

TEST(Energy, DissipatedPower) {
    EXPECT_EQ(dissipated_power(kCubic, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(dissipated_power(kCubic, 2.0), 16.0);
    EXPECT_DOUBLE_EQ(dissipated_power(SfcParams{1.0, 2.0, 1.0, 1.0}, 3.0), 18.0);
    EXPECT_DOUBLE_EQ(kinetic_storage(LacParams{2.0, 1.0, 1.0}, 3.0), 9.0);
}

TEST(FreeMotion, SpeedDecreasesStrictlyUnderTheStepBound) {
    const SfcParams p = fixed_sfc();
    for (double v0 : {-0.8, 0.05, 0.4}) {
        ControllerState s;
        s.velocity = v0;
        // dt well inside 2 m / D'(v0) = 2 m / (n mu v0^2).
        const double dt = 0.5 * 2.0 * p.mass / (p.exponent * p.viscosity * v0 * v0);
        double prev = std::abs(v0);
        for (int k = 0; k < 2000; ++k) {
            s = step_discrete(p, s, 0.0, dt);
            if (s.velocity == 0.0) break;
            EXPECT_LT(std::abs(s.velocity), prev);
            prev = std::abs(s.velocity);
        }
    }
}
