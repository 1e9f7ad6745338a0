#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sfc/controller.hpp"
#include "sfc/describing.hpp"
#include "sfc/errors.hpp"
#include "sfc/presets.hpp"
#include "sfc/stability.hpp"

using namespace sfc;
using std::numbers::pi;

namespace {
SfcParams fixed_sfc() { return std::get<SfcParams>(find_preset("fixed_sfc").params); }
}  // namespace

TEST(MaxSampleTime, Examples) {
    EXPECT_NEAR(max_sample_time(fixed_sfc(), 50.0), 0.006707, 5e-6);
    EXPECT_DOUBLE_EQ(max_sample_time(SfcParams{1.0, 1.0, 1.0, 1.0}, 3.0), 2.0);
    EXPECT_DOUBLE_EQ(max_sample_time(SfcParams{1.0, 1.0, 1.0, 1.0}, 300.0), 2.0);
    // Mobile set at 70 N: the closed form gives 14.46 ms.
    EXPECT_NEAR(max_sample_time(SfcParams{1.0, 20.0, 3.0, 0.04}, 70.0), 0.01446, 5e-6);
    // Direct evaluation of 2 m mu^(-1/n) / n f^((1-n)/n).
    EXPECT_NEAR(max_sample_time(fixed_sfc(), 50.0),
                2.0 * std::pow(393.0, -1.0 / 3.0) / 3.0 * std::pow(50.0, -2.0 / 3.0), 1e-15);
}

TEST(MaxSampleTime, MatchesGenericStepLimit) {
    for (double f : {0.5, 5.0, 50.0}) {
        EXPECT_NEAR(stable_step_limit(fixed_sfc(), f) / max_sample_time(fixed_sfc(), f), 1.0, 1e-12);
    }
    EXPECT_DOUBLE_EQ(stable_step_limit(find_preset("fixed_lac").params, 50.0), 2.0 / 17.0);
    const auto nac = std::get<NacParams>(find_preset("fixed_nac").params);
    EXPECT_DOUBLE_EQ(stable_step_limit(nac, 50.0), 2.0 / nac_damping_coeff(nac, 50.0));
}

TEST(MaxSampleTime, NonincreasingInForceAndExponent) {
    double prev = 1e300;
    for (double f = 0.1; f < 1e3; f *= 1.5) {
        const double t = max_sample_time(fixed_sfc(), f);
        EXPECT_LE(t, prev);
        prev = t;
    }
    for (double f : {1.5, 10.0, 70.0}) {
        prev = 1e300;
        for (double n = 1.0; n < 12.0; n += 0.25) {
            const double t = max_sample_time(SfcParams{1.0, 1.0, n, 1.0}, f);
            EXPECT_LE(t, prev * (1.0 + 1e-12)) << "f=" << f << " n=" << n;
            prev = t;
        }
    }
}

TEST(MaxBandwidth, Examples) {
    const SfcParams p{1.0, 1.0, 3.0, 1.0};
    const double full = std::pow(2.0, 2.0 / 3.0) * std::cbrt(psi(3.0)) / 0.006;
    EXPECT_NEAR(max_bandwidth(p, 0.002, 10.0, 10.0), full, 1e-9);
    EXPECT_NEAR(full, 352.0, 0.5);
    const double top = max_bandwidth(p, 0.02, 70.0, 70.0);
    EXPECT_NEAR(max_bandwidth(p, 0.02, 10.0, 70.0) / top, std::pow(1.0 / 7.0, 2.0 / 3.0), 1e-12);
    EXPECT_NEAR(std::pow(1.0 / 7.0, 2.0 / 3.0), 0.2733, 1e-4);
}

TEST(CoupledCheck, Examples) {
    const SfcParams p = fixed_sfc();
    const double b = std::cbrt(60.0 / 393.0);
    EXPECT_NEAR(worst_case_amplitude(p, 60.0), b, 1e-15);
    EXPECT_NEAR(b, 0.53447, 1e-5);
    const double q = coupling_factor(p, b, 0.002);
    EXPECT_NEAR(q, 393.0 * b * b * psi(3.0) * 0.002, 1e-13);
    EXPECT_NEAR(q, 0.52903, 1e-5);
    const ConstraintReport ok = coupled_stability_check({p, b, 10.0, 0.002});
    EXPECT_TRUE(ok.satisfied);
    EXPECT_LT(ok.margin, 1.0);
    ASSERT_EQ(ok.checks.size(), 2u);
    EXPECT_EQ(ok.checks[0].name, "Q");
    EXPECT_EQ(ok.checks[1].name, "dt_omega");

    // Q = 1.2 by construction: fails whatever dt omega is.
    const SfcParams unit{1.0, 1.0, 1.0, 1.0};
    const double dt = 1.2 / psi(1.0);
    const ConstraintReport bad = coupled_stability_check({unit, 1.0, 0.1, dt});
    EXPECT_NEAR(bad.checks[0].value, 1.2, 1e-12);
    EXPECT_FALSE(bad.satisfied);
    EXPECT_GE(bad.margin, 1.0);

    // Frequency outside (0, pi / dt).
    EXPECT_FALSE(coupled_stability_check({p, 0.1, 2000.0, 0.002}).satisfied);
}

TEST(ConstraintReport, SatisfiedIffMarginBelowOne) {
    for (double v : {0.1, 0.99, 1.0, 1.01, 5.0}) {
        const ConstraintReport r = make_report({make_check("a", v, 1.0), make_check("b", 0.5, 1.0)});
        EXPECT_EQ(r.satisfied, r.margin < 1.0);
        EXPECT_DOUBLE_EQ(r.margin, std::max(v, 0.5));
    }
}

TEST(ApparentPhase, Examples) {
    EXPECT_NEAR(apparent_admittance_phase(0.5, pi / 2.0), std::atan(-0.5) - pi / 4.0, 1e-14);
    EXPECT_NEAR(apparent_admittance_phase(0.5, pi / 2.0), -1.2490, 1e-4);
    EXPECT_NEAR(apparent_admittance_phase(0.5, 1e-9), 0.0, 1e-8);
    EXPECT_THROW(apparent_admittance_phase(0.5, 0.0), DomainError);
    EXPECT_THROW(apparent_admittance_phase(0.5, pi), DomainError);
    EXPECT_THROW(apparent_admittance_phase(0.5, 4.0), DomainError);
}

TEST(ApparentPhase, BoundedOnGrid) {
    for (int i = 1; i <= 100; ++i) {
        for (int k = 1; k <= 100; ++k) {
            const double q = i / 101.0;
            const double x = pi * k / 101.0;
            const double ph = apparent_admittance_phase(q, x);
            EXPECT_LT(ph, -x / 2.0);
            EXPECT_GT(ph, -pi / 2.0);
        }
    }
}

TEST(ApparentPhase, ParamsOverloadUsesCouplingFactor) {
    const SfcParams p = fixed_sfc();
    const double b = 0.3;
    const double q = coupling_factor(p, b, 0.002);
    EXPECT_DOUBLE_EQ(apparent_admittance_phase(p, b, 100.0, 0.002), apparent_admittance_phase(q, 0.2));
}

TEST(EulerSensitivity, Examples) {
    const auto cubic = euler_sensitivity(SfcParams{1.0, 1.0, 3.0, 1.0}, 1.0, 0.1, 10.0);
    EXPECT_DOUBLE_EQ(cubic.nominal, 9.0);
    EXPECT_NEAR(cubic.perturbed, 8.669, 1e-12);
    const auto steep = euler_sensitivity(SfcParams{1.0, 1.0, 100.0, 1.0}, 1.0, 0.1, 10.0);
    EXPECT_DOUBLE_EQ(steep.nominal, 9.0);
    EXPECT_NEAR(steep.perturbed, -13770.61, 0.01);
    const auto same = euler_sensitivity(SfcParams{1.0, 1.0, 3.0, 1.0}, 0.7, 0.0, 2.0);
    EXPECT_EQ(same.nominal, same.perturbed);
}

TEST(OscillationDetector, SyntheticTraces) {
    std::vector<double> a(400, 0.0);
    std::vector<double> v(400, 1.0);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (i % 2 == 0 ? 1.0 : -1.0);
    auto r = detect_oscillation(a, v, 1.0);
    EXPECT_TRUE(r.oscillatory);
    EXPECT_FALSE(r.diverged);

    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::exp(-0.05 * static_cast<double>(i));
    r = detect_oscillation(a, v, 1.0);
    EXPECT_FALSE(r.oscillatory);
    EXPECT_EQ(r.sign_changes, 0u);

    v[200] = 11.0;
    EXPECT_TRUE(detect_oscillation(a, v, 1.0).diverged);
    v[200] = std::nan("");
    EXPECT_TRUE(detect_oscillation(a, v, 1.0).diverged);
}

TEST(OscillationDetector, IgnoresRoundOffChatter) {
    std::vector<double> a(400, 0.0);
    std::vector<double> v(400, 1.0);
    a[0] = 50.0;
    for (std::size_t i = 300; i < 400; ++i) a[i] = (i % 2 == 0 ? 1e-13 : -1e-13);
    EXPECT_FALSE(detect_oscillation(a, v, 1.0).oscillatory);
}

TEST(SampleTimeStudy, VerdictsAroundTheBound) {
    const SfcParams p = fixed_sfc();
    EXPECT_EQ(study_sample_time(p, 50.0, 0.008).verdict, SampleTimeVerdict::Oscillatory);
    EXPECT_EQ(study_sample_time(p, 50.0, 0.0067).verdict, SampleTimeVerdict::Marginal);
    EXPECT_EQ(study_sample_time(p, 50.0, 0.005).verdict, SampleTimeVerdict::Converged);
    EXPECT_EQ(study_sample_time(p, 50.0, 0.002).verdict, SampleTimeVerdict::Converged);
}

TEST(SampleTimeStudy, OscillationOnsetTracksTheBound) {
    // Strictly above the bound the tail oscillates; at 0.8 of it or below it
    // settles without sustained sign changes.
    for (double f : {10.0, 50.0, 120.0}) {
        const SfcParams p = fixed_sfc();
        const double bound = max_sample_time(p, f);
        for (double r : {1.1, 1.3, 1.6}) {
            const auto s = study_sample_time(p, f, r * bound, 2.0);
            EXPECT_TRUE(s.detector.oscillatory || s.detector.diverged) << "f=" << f << " r=" << r;
        }
        for (double r : {0.2, 0.5, 0.8}) {
            const auto s = study_sample_time(p, f, r * bound, 2.0);
            EXPECT_FALSE(s.detector.oscillatory) << "f=" << f << " r=" << r;
            EXPECT_EQ(s.verdict, SampleTimeVerdict::Converged);
        }
    }
}

TEST(SampleTimeVerdict, MarginalBandTakesPrecedence) {
    OscillationReport osc;
    osc.oscillatory = true;
    EXPECT_EQ(sample_time_verdict(1.04, osc), SampleTimeVerdict::Marginal);
    EXPECT_EQ(sample_time_verdict(0.96, OscillationReport{}), SampleTimeVerdict::Marginal);
    EXPECT_EQ(sample_time_verdict(1.06, osc), SampleTimeVerdict::Oscillatory);
    EXPECT_EQ(sample_time_verdict(0.5, OscillationReport{}), SampleTimeVerdict::Converged);
    EXPECT_STREQ(to_string(SampleTimeVerdict::Diverged), "diverged");
}
