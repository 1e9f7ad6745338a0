#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sfc {

enum class Window { Rectangular, Hann };

/// One-sided power spectrum |X_k|^2, k = 0 .. N/2, with interior bins doubled.
std::vector<double> one_sided_power(std::span<const double> samples, Window window);

/// Frequency of bin k for an N-sample record at spacing dt [Hz].
double bin_frequency_hz(std::size_t k, std::size_t n, double dt);

/// Fraction of Hann-windowed one-sided power with angular frequency in
/// [band_lo, band_hi] rad/s. Needs at least 16 samples and band_lo < band_hi.
/// An all-zero signal has no energy anywhere and returns 0.
double band_energy(std::span<const double> samples, double dt, double band_lo, double band_hi);

}  // namespace sfc
