#pragma once

#include <span>
#include <vector>

#include "sfc/params.hpp"

namespace sfc {

/// Normalization of the fundamental-harmonic coefficient.
///
/// `GammaRatio` is Psi(n) = 2 sqrt(pi) Gamma(1 + n/2) / Gamma((3 + n)/2), the form used
/// by every closed-form result in this module. `Fourier` is Psi(n) / pi, the
/// coefficient a direct Fourier projection of mu |B sin|^n sign(sin) yields
/// (it equals 1 at n = 1). GammaRatio is the default everywhere.
enum class PsiConvention { GammaRatio, Fourier };

/// Fundamental describing-function sample.
struct DescribingPoint {
    double output_amplitude = 0.0;  // B [m/s]
    double omega = 0.0;             // [rad/s]
    double gain = 0.0;              // |N(B, omega)| [(m/s)/N]
    double phase = 0.0;             // (-pi/2, 0] rad
};

struct BodePoint {
    double omega = 0.0;    // [rad/s]
    double gain_db = 0.0;  // 20 log10 |gain|
    double phase = 0.0;    // [rad]
};

/// Frequency response at a single input force amplitude.
struct BodeCurve {
    double amplitude = 0.0;  // A [N]
    std::vector<BodePoint> points;  // strictly increasing omega
};

/// Psi(n) for n > 0; throws DomainError otherwise.
double psi(double n, PsiConvention convention = PsiConvention::GammaRatio);

// Closed-form describing-function results. The output gain g is not included:
// it shifts every curve by the same 20 log10 g.

/// |N| = 1 / sqrt((m w)^2 + (mu B^(n-1) Psi)^2). Requires B > 0, w >= 0.
double describing_gain(const SfcParams& p, double output_amplitude, double omega,
                       PsiConvention convention = PsiConvention::GammaRatio);

/// -atan(m w / (mu B^(n-1) Psi)). Requires B > 0, w >= 0.
double describing_phase(const SfcParams& p, double output_amplitude, double omega,
                        PsiConvention convention = PsiConvention::GammaRatio);

DescribingPoint describe(const SfcParams& p, double output_amplitude, double omega,
                         PsiConvention convention = PsiConvention::GammaRatio);

/// Harmonic-balance input amplitude A(B, w) = sqrt((m B w)^2 + (mu B^n Psi)^2).
double input_amplitude(const SfcParams& p, double output_amplitude, double omega,
                       PsiConvention convention = PsiConvention::GammaRatio);

/// B(A, 0) = (A / (mu Psi))^(1/n).
double dc_output_amplitude(const SfcParams& p, double force_amplitude,
                           PsiConvention convention = PsiConvention::GammaRatio);

/// Inverts input_amplitude in B at fixed w (monotone bisection).
double output_amplitude(const SfcParams& p, double force_amplitude, double omega,
                        PsiConvention convention = PsiConvention::GammaRatio);

/// omega_c = ((mu Psi)^(1/n) / m) (A / sqrt 2)^((n-1)/n)  [rad/s]
double bandwidth_analytic(const SfcParams& p, double force_amplitude,
                          PsiConvention convention = PsiConvention::GammaRatio);

/// tau = m / ((mu Psi)^(1/n) A^((n-1)/n))  [s]
double time_constant_analytic(const SfcParams& p, double force_amplitude,
                              PsiConvention convention = PsiConvention::GammaRatio);

/// Settling time, 4 tau.
double settling_time_analytic(const SfcParams& p, double force_amplitude,
                              PsiConvention convention = PsiConvention::GammaRatio);

/// DC gain change between A and 10^w A: 20 w (1 - n) / n dB. Requires n >= 1, w >= 1.
double gain_variation(double n, int decades);

/// Lower limit of gain_variation as n grows without bound: -20 w dB.
double gain_variation_limit(int decades);

/// Describing-function Bode curve at force amplitude A, solving B(A, w) at each
/// grid frequency. The grid must be strictly increasing and positive.
BodeCurve analytic_bode(const SfcParams& p, double force_amplitude,
                        std::span<const double> omega_grid,
                        PsiConvention convention = PsiConvention::GammaRatio);

/// n log-spaced frequencies on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace sfc
