#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sfc/describing.hpp"
#include "sfc/errors.hpp"
#include "sfc/special.hpp"

using namespace sfc;
using std::numbers::pi;

namespace {
const SfcParams kUnit{1.0, 1.0, 3.0, 1.0};
}

TEST(Gamma, MatchesStdTgamma) {
    for (double x = 0.5; x <= 60.0; x += 0.125) {
        EXPECT_NEAR(lanczos_gamma(x) / std::tgamma(x), 1.0, 1e-10) << x;
        EXPECT_NEAR(lanczos_log_gamma(x), std::lgamma(x), 1e-10 * std::max(1.0, std::abs(std::lgamma(x))))
            << x;
    }
    EXPECT_THROW(lanczos_gamma(0.0), DomainError);
    EXPECT_THROW(lanczos_gamma(-1.5), DomainError);
}

TEST(Psi, ClosedFormValues) {
    EXPECT_NEAR(psi(1.0), pi, 1e-13);
    EXPECT_NEAR(psi(2.0), 8.0 / 3.0, 1e-13);
    EXPECT_NEAR(psi(3.0), 3.0 * pi / 4.0, 1e-13);
    EXPECT_NEAR(psi(1.0, PsiConvention::Fourier), 1.0, 1e-13);
    EXPECT_THROW(psi(0.0), DomainError);
    EXPECT_THROW(psi(-2.0), DomainError);
}

TEST(Psi, AgreesWithQuadratureOracle) {
    for (double n : {0.5, 1.0, 1.7, 2.0, 3.0, 4.5, 10.0, 25.0, 60.0, 100.0}) {
        EXPECT_NEAR(psi(n) / oracle::psi_by_quadrature(n), 1.0, 1e-9) << n;
        EXPECT_NEAR(psi(n) / oracle::psi_by_tgamma(n), 1.0, 1e-10) << n;
    }
}

TEST(Psi, FourierConventionIsTheFundamentalCoefficient) {
    // b1 of |sin|^n sign(sin) is (1/pi) * integral of |sin|^(n+1).
    for (double n : {1.0, 2.0, 3.0, 5.5}) {
        const double b1 = oracle::psi_by_quadrature(n) / pi;
        EXPECT_NEAR(psi(n, PsiConvention::Fourier), b1, 1e-9);
    }
}

TEST(DescribingGain, Examples) {
    EXPECT_NEAR(describing_gain(kUnit, 1.0, 0.0), 1.0 / (3.0 * pi / 4.0), 1e-12);
    EXPECT_NEAR(describing_gain(kUnit, 1.0, 0.0), 0.42441, 1e-5);
    EXPECT_LT(describing_gain(kUnit, 0.7, 1e6), 1.01e-6);
    const SfcParams linear{1.0, 1.0, 1.0, 1.0};
    // First-order system: |N(omega = mu Psi / m)| = DC / sqrt 2 under the same Psi.
    const double dc = describing_gain(linear, 3.0, 0.0);
    EXPECT_NEAR(describing_gain(linear, 3.0, pi) / dc, 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(describing_gain(linear, 0.2, pi) / dc, 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(DescribingPhase, Examples) {
    EXPECT_EQ(describing_phase(kUnit, 1.0, 0.0), 0.0);
    EXPECT_NEAR(describing_phase(kUnit, 1.0, 1e9), -pi / 2.0, 1e-8);
    EXPECT_NEAR(describing_phase(kUnit, 1.0, psi(3.0)), -pi / 4.0, 1e-13);
    for (double b = 0.01; b < 10.0; b *= 1.7) {
        for (double w = 0.0; w < 1e4; w = w * 3.0 + 0.01) {
            const double ph = describing_phase(kUnit, b, w);
            EXPECT_LE(ph, 0.0);
            EXPECT_GT(ph, -pi / 2.0);
        }
    }
}

TEST(DcOutputAmplitude, Examples) {
    EXPECT_NEAR(dc_output_amplitude(kUnit, 1.0), std::cbrt(1.0 / (3.0 * pi / 4.0)), 1e-14);
    EXPECT_NEAR(dc_output_amplitude(kUnit, 1.0), 0.75150, 1e-5);
    EXPECT_NEAR(dc_output_amplitude(SfcParams{1.0, 1.0, 1.0, 1.0}, 7.0), 7.0 / pi, 1e-14);
    // (5 / (393 Psi(3)))^(1/3); 0.23349 would be (5/393)^(1/3), which drops Psi.
    EXPECT_NEAR(dc_output_amplitude(SfcParams{1.0, 393.0, 3.0, 1.0}, 5.0), 0.17544, 1e-5);
}

TEST(InputAmplitude, Examples) {
    EXPECT_NEAR(input_amplitude(kUnit, 1.3, 0.0), std::pow(1.3, 3) * psi(3.0), 1e-13);
    EXPECT_NEAR(input_amplitude(kUnit, 1.0, psi(3.0)), std::sqrt(2.0) * psi(3.0), 1e-13);
    EXPECT_NEAR(input_amplitude(kUnit, 1.0, psi(3.0)), 3.3322, 1e-4);
    EXPECT_NEAR(input_amplitude(SfcParams{1.0, 1.0, 1.0, 1.0}, 1.0, 1.0), std::sqrt(1.0 + pi * pi), 1e-13);
}

TEST(InputAmplitude, RoundTripThroughDcAmplitude) {
    for (double n : {1.0, 2.0, 3.0, 7.0}) {
        const SfcParams p{1.2, 3.4, n, 0.5};
        for (double a = 0.01; a < 1e4; a *= 3.3) {
            EXPECT_NEAR(input_amplitude(p, dc_output_amplitude(p, a), 0.0) / a, 1.0, 1e-9);
        }
    }
}

TEST(OutputAmplitude, InvertsHarmonicBalance) {
    for (double w : {0.0, 0.3, 3.0, 40.0}) {
        for (double a : {0.5, 5.0, 80.0}) {
            const double b = output_amplitude(kUnit, a, w);
            EXPECT_NEAR(input_amplitude(kUnit, b, w) / a, 1.0, 1e-9);
        }
    }
}

TEST(Bandwidth, TableValues) {
    EXPECT_NEAR(bandwidth_analytic(kUnit, 10.0) / 4.90, 1.0, 0.005);
    EXPECT_NEAR(bandwidth_analytic(kUnit, 100.0) / 22.75, 1.0, 0.005);
    EXPECT_NEAR(bandwidth_analytic(kUnit, 1.0) / 1.05, 1.0, 0.01);
    // Direct formula: (mu Psi)^(1/n) / m (A / sqrt2)^((n-1)/n).
    EXPECT_NEAR(bandwidth_analytic(kUnit, 1.0),
                std::cbrt(oracle::psi_by_quadrature(3.0)) * std::pow(1.0 / std::sqrt(2.0), 2.0 / 3.0), 1e-9);
    const SfcParams linear{1.0, 1.0, 1.0, 1.0};
    EXPECT_NEAR(bandwidth_analytic(linear, 0.1), pi, 1e-13);
    EXPECT_NEAR(bandwidth_analytic(linear, 1e3), pi, 1e-12);
}

TEST(Bandwidth, LogSlopeIsExact) {
    for (double n : {1.0, 2.0, 3.0, 10.0}) {
        const SfcParams p{1.0, 2.0, n, 1.0};
        const double a1 = 0.3;
        const double a2 = 300.0;
        const double slope = (std::log(bandwidth_analytic(p, a2)) - std::log(bandwidth_analytic(p, a1))) /
                             (std::log(a2) - std::log(a1));
        EXPECT_NEAR(slope, (n - 1.0) / n, 1e-12);
    }
}

TEST(TimeConstant, TableValues) {
    const SfcParams p{1.0, 393.0, 3.0, 0.21};
    EXPECT_NEAR(time_constant_analytic(p, 0.5), 0.1629, 5e-5);
    EXPECT_NEAR(time_constant_analytic(p, 5.0), 0.0351, 5e-5);
    EXPECT_NEAR(time_constant_analytic(p, 50.0), 0.00756, 5e-6);
    EXPECT_DOUBLE_EQ(settling_time_analytic(p, 5.0), 4.0 * time_constant_analytic(p, 5.0));
}

TEST(GainVariation, TableValuesAndBounds) {
    EXPECT_NEAR(gain_variation(1.0, 2), 0.0, 1e-12);
    EXPECT_NEAR(gain_variation(3.0, 2), -26.67, 0.005);
    EXPECT_NEAR(gain_variation(10.0, 2), -36.0, 1e-12);
    EXPECT_NEAR(gain_variation(100.0, 2), -39.6, 1e-12);
    EXPECT_EQ(gain_variation_limit(2), -40.0);
    double prev = 1.0;
    for (double n = 1.0; n < 1e4; n *= 1.3) {
        for (int w : {1, 2, 3}) {
            const double q = gain_variation(n, w);
            EXPECT_LE(q, 0.0);
            EXPECT_GT(q, -20.0 * w);
        }
        const double q2 = gain_variation(n, 2);
        EXPECT_LT(q2, prev);
        prev = q2;
    }
    EXPECT_THROW(gain_variation(0.5, 2), DomainError);
    EXPECT_THROW(gain_variation(3.0, 0), DomainError);
}

TEST(Stratification, GainFallsWithAmplitudeOnlyWhenNonlinear) {
    for (double w : {0.0, 0.5, 5.0}) {
        double prev = 1e300;
        for (double a = 0.1; a < 1e3; a *= 2.0) {
            const double g = describing_gain(kUnit, dc_output_amplitude(kUnit, a), w);
            EXPECT_LT(g, prev);
            prev = g;
        }
        const SfcParams linear{1.0, 1.0, 1.0, 1.0};
        const double g0 = describing_gain(linear, dc_output_amplitude(linear, 0.1), w);
        for (double a = 0.1; a < 1e3; a *= 2.0) {
            EXPECT_NEAR(describing_gain(linear, dc_output_amplitude(linear, a), w), g0, 1e-14);
        }
    }
}

TEST(AnalyticBode, CurveShape) {
    const auto grid = log_grid(0.01, 100.0, 60);
    ASSERT_EQ(grid.size(), 60u);
    EXPECT_NEAR(grid.front(), 0.01, 1e-15);
    EXPECT_NEAR(grid.back(), 100.0, 1e-12);
    const BodeCurve lo = analytic_bode(kUnit, 1.0, grid);
    const BodeCurve hi = analytic_bode(kUnit, 10.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_GT(lo.points[i].gain_db, hi.points[i].gain_db);
        EXPECT_LE(lo.points[i].phase, 0.0);
        if (i > 0) EXPECT_GT(lo.points[i].omega, lo.points[i - 1].omega);
    }
}
