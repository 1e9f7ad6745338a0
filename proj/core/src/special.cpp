#include "sfc/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeff = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Series A_g(z) with z = x - 1.
double lanczos_series(double z) {
    double sum = kLanczosCoeff[0];
    for (std::size_t i = 1; i < kLanczosCoeff.size(); ++i) {
        sum += kLanczosCoeff[i] / (z + static_cast<double>(i));
    }
    return sum;
}

void require_positive(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("gamma: argument must be finite and > 0");
}

}  // namespace

double lanczos_gamma(double x) {
    require_positive(x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    // Split the power so t^(z+0.5) does not overflow before exp(-t) shrinks it.
    const double half = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * lanczos_series(z);
}

double lanczos_log_gamma(double x) {
    require_positive(x);
    const double z = x - 1.0;
    const double t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(lanczos_series(z));
}

}  // namespace sfc
