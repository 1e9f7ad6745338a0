#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library: each value is obtained by a different route than the code under
// test (quadrature instead of Gamma ratios, bisection instead of closed forms).

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace oracle {

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    if (n % 2 != 0) ++n;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// Integral of |sin t|^(n+1) over one period; equals the Gamma-ratio Psi(n).
inline double psi_by_quadrature(double n) {
    // Integrate a quarter period, where sin >= 0, and use symmetry.
    return 4.0 * simpson([n](double t) { return std::pow(std::sin(t), n + 1.0); }, 0.0,
                         std::numbers::pi / 2.0);
}

/// Psi(n) through the standard library's Gamma.
inline double psi_by_tgamma(double n) {
    return 2.0 * std::sqrt(std::numbers::pi) * std::tgamma(1.0 + n / 2.0) / std::tgamma((3.0 + n) / 2.0);
}

/// Root of a sign-changing function on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
    double flo = f(lo);
    if (flo * f(hi) > 0.0) throw std::runtime_error("bisect: no sign change");
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// End point of a planar arm, for finite-difference Jacobians.
inline void planar_fk(const double* lengths, const double* q, int n, double& x, double& y) {
    x = 0.0;
    y = 0.0;
    double angle = 0.0;
    for (int i = 0; i < n; ++i) {
        angle += q[i];
        x += lengths[i] * std::cos(angle);
        y += lengths[i] * std::sin(angle);
    }
}

}  // namespace oracle
