#include "sfc/spectrum.hpp"

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <numbers>

#include <fftw3.h>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

constexpr std::size_t kMinSamples = 16;

// FFTW's planner is not reentrant; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};

class RealFft {
public:
    explicit RealFft(std::size_t n)
        : n_(n),
          in_(static_cast<double*>(fftw_malloc(sizeof(double) * n))),
          out_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * (n / 2 + 1)))) {
        if (!in_ || !out_) throw NumericError("fft: allocation failed");
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(n), in_.get(), out_.get(), FFTW_ESTIMATE);
        if (plan_ == nullptr) throw NumericError("fft: planning failed");
    }

    ~RealFft() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }

    RealFft(const RealFft&) = delete;
    RealFft& operator=(const RealFft&) = delete;

    double* input() { return in_.get(); }

    void execute() { fftw_execute(plan_); }

    std::complex<double> bin(std::size_t k) const { return {out_.get()[k][0], out_.get()[k][1]}; }

private:
    std::size_t n_;
    std::unique_ptr<double, FftwFree> in_;
    std::unique_ptr<fftw_complex, FftwFree> out_;
    fftw_plan plan_ = nullptr;
};

}  // namespace

std::vector<double> one_sided_power(std::span<const double> samples, Window window) {
    const std::size_t n = samples.size();
    if (n < 2) throw DomainError("one_sided_power: need at least two samples");
    RealFft fft(n);
    double* in = fft.input();
    for (std::size_t i = 0; i < n; ++i) {
        double w = 1.0;
        if (window == Window::Hann) {
            w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                     static_cast<double>(n - 1));
        }
        in[i] = w * samples[i];
    }
    fft.execute();

    std::vector<double> power(n / 2 + 1);
    for (std::size_t k = 0; k < power.size(); ++k) {
        power[k] = std::norm(fft.bin(k));
        const bool nyquist = (n % 2 == 0) && k == n / 2;
        if (k != 0 && !nyquist) power[k] *= 2.0;
    }
    return power;
}

double bin_frequency_hz(std::size_t k, std::size_t n, double dt) {
    return static_cast<double>(k) / (static_cast<double>(n) * dt);
}

double band_energy(std::span<const double> samples, double dt, double band_lo, double band_hi) {
    if (samples.size() < kMinSamples) throw DomainError("band_energy: need at least 16 samples");
    if (!(dt > 0.0)) throw DomainError("band_energy: dt must be > 0");
    if (!(band_hi > band_lo) || band_hi < 0.0) throw DomainError("band_energy: empty band");

    const auto power = one_sided_power(samples, Window::Hann);
    double total = 0.0;
    double inside = 0.0;
    for (std::size_t k = 0; k < power.size(); ++k) {
        const double omega = 2.0 * std::numbers::pi * bin_frequency_hz(k, samples.size(), dt);
        total += power[k];
        if (omega >= band_lo && omega <= band_hi) inside += power[k];
    }
    return total > 0.0 ? inside / total : 0.0;
}

}  // namespace sfc
