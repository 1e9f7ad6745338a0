#include "sfc/describing.hpp"

#include <cmath>
#include <numbers>

#include "sfc/errors.hpp"
#include "sfc/special.hpp"

namespace sfc {
namespace {

void check_amplitude(double b, const char* what) {
    if (!(b > 0.0) || !std::isfinite(b)) throw DomainError(std::string(what) + ": amplitude must be > 0");
}

void check_omega(double omega, const char* what) {
    if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError(std::string(what) + ": omega must be >= 0");
}

// mu B^(n-1) Psi(n): the describing function of the damping term alone.
double equivalent_damping(const SfcParams& p, double b, PsiConvention c) {
    return p.viscosity * std::pow(b, p.exponent - 1.0) * psi(p.exponent, c);
}

}  // namespace

double psi(double n, PsiConvention convention) {
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("psi: exponent must be > 0");
    const double a = 1.0 + 0.5 * n;
    const double b = 0.5 * (3.0 + n);
    double ratio;
    if (b < 60.0) {
        ratio = lanczos_gamma(a) / lanczos_gamma(b);
    } else {
        ratio = std::exp(lanczos_log_gamma(a) - lanczos_log_gamma(b));
    }
    const double value = 2.0 * std::sqrt(std::numbers::pi) * ratio;
    return convention == PsiConvention::GammaRatio ? value : value / std::numbers::pi;
}

double describing_gain(const SfcParams& p, double output_amplitude, double omega,
                       PsiConvention convention) {
    check_amplitude(output_amplitude, "describing_gain");
    check_omega(omega, "describing_gain");
    return 1.0 / std::hypot(p.mass * omega, equivalent_damping(p, output_amplitude, convention));
}

double describing_phase(const SfcParams& p, double output_amplitude, double omega,
                        PsiConvention convention) {
    check_amplitude(output_amplitude, "describing_phase");
    check_omega(omega, "describing_phase");
    return -std::atan(p.mass * omega / equivalent_damping(p, output_amplitude, convention));
}

DescribingPoint describe(const SfcParams& p, double output_amplitude, double omega,
                         PsiConvention convention) {
    return {output_amplitude, omega, describing_gain(p, output_amplitude, omega, convention),
            describing_phase(p, output_amplitude, omega, convention)};
}

double input_amplitude(const SfcParams& p, double output_amplitude, double omega,
                       PsiConvention convention) {
    check_amplitude(output_amplitude, "input_amplitude");
    check_omega(omega, "input_amplitude");
    const double b = output_amplitude;
    return std::hypot(p.mass * b * omega,
                      p.viscosity * std::pow(b, p.exponent) * psi(p.exponent, convention));
}

double dc_output_amplitude(const SfcParams& p, double force_amplitude, PsiConvention convention) {
    check_amplitude(force_amplitude, "dc_output_amplitude");
    return std::pow(force_amplitude / (p.viscosity * psi(p.exponent, convention)),
                    1.0 / p.exponent);
}

double output_amplitude(const SfcParams& p, double force_amplitude, double omega,
                        PsiConvention convention) {
    check_amplitude(force_amplitude, "output_amplitude");
    check_omega(omega, "output_amplitude");
    // A(B) is strictly increasing in B and each quadrature term alone bounds B.
    double hi = dc_output_amplitude(p, force_amplitude, convention);
    if (omega > 0.0) hi = std::min(hi, force_amplitude / (p.mass * omega));
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (input_amplitude(p, mid, omega, convention) < force_amplitude) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double bandwidth_analytic(const SfcParams& p, double force_amplitude, PsiConvention convention) {
    check_amplitude(force_amplitude, "bandwidth_analytic");
    const double n = p.exponent;
    return std::pow(p.viscosity * psi(n, convention), 1.0 / n) / p.mass *
           std::pow(force_amplitude / std::numbers::sqrt2, (n - 1.0) / n);
}

double time_constant_analytic(const SfcParams& p, double force_amplitude,
                              PsiConvention convention) {
    check_amplitude(force_amplitude, "time_constant_analytic");
    const double n = p.exponent;
    return p.mass / (std::pow(p.viscosity * psi(n, convention), 1.0 / n) *
                     std::pow(force_amplitude, (n - 1.0) / n));
}

double settling_time_analytic(const SfcParams& p, double force_amplitude,
                              PsiConvention convention) {
    return 4.0 * time_constant_analytic(p, force_amplitude, convention);
}

double gain_variation(double n, int decades) {
    if (!(n >= 1.0) || !std::isfinite(n)) throw DomainError("gain_variation: n must be >= 1");
    if (decades < 1) throw DomainError("gain_variation: decade count must be >= 1");
    return 20.0 * decades * (1.0 - n) / n;
}

double gain_variation_limit(int decades) {
    if (decades < 1) throw DomainError("gain_variation_limit: decade count must be >= 1");
    return -20.0 * decades;
}

BodeCurve analytic_bode(const SfcParams& p, double force_amplitude,
                        std::span<const double> omega_grid, PsiConvention convention) {
    BodeCurve curve;
    curve.amplitude = force_amplitude;
    curve.points.reserve(omega_grid.size());
    double previous = 0.0;
    for (double w : omega_grid) {
        if (!(w > previous)) throw DomainError("analytic_bode: grid must be positive and strictly increasing");
        previous = w;
        const double b = output_amplitude(p, force_amplitude, w, convention);
        curve.points.push_back({w, 20.0 * std::log10(describing_gain(p, b, w, convention)),
                                describing_phase(p, b, w, convention)});
    }
    return curve;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw DomainError("log_grid: need 0 < lo < hi and n >= 2");
    std::vector<double> grid(n);
    const double a = std::log10(lo);
    const double step = (std::log10(hi) - a) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) grid[i] = std::pow(10.0, a + step * static_cast<double>(i));
    grid.back() = hi;
    return grid;
}

}  // namespace sfc
