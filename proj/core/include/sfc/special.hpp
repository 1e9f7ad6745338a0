#pragma once

namespace sfc {

/// Gamma function by the Lanczos approximation (g = 7, 9 coefficients).
/// Defined for x > 0; relative error is around 1e-15 on [0.5, 60].
double lanczos_gamma(double x);

/// log Gamma(x) for x > 0, same approximation; use for ratios at large x.
double lanczos_log_gamma(double x);

}  // namespace sfc
