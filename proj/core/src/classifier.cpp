#include "sfc/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "sfc/errors.hpp"
#include "sfc/spectrum.hpp"

namespace sfc {
namespace {

constexpr double kSupportUpper = 0.99;
constexpr double kSupportLower = 0.01;

}  // namespace

void validate(const ForceSetBounds& b) {
    for (double x : {b.force_threshold, b.impact_frequency, b.traction_frequency, b.noise_floor}) {
        if (!(x >= 0.0) || std::isnan(x)) throw DomainError("force bounds must be nonnegative");
    }
    if (b.traction_frequency > b.impact_frequency) {
        throw DomainError("traction frequency threshold must not exceed the impact threshold");
    }
}

std::string_view to_string(ForceLabel label) {
    switch (label) {
        case ForceLabel::Contactless: return "contactless";
        case ForceLabel::Traction: return "traction";
        case ForceLabel::Impact: return "impact";
        case ForceLabel::Unclassified: return "unclassified";
    }
    return "unclassified";
}

SignalStats signal_stats(std::span<const double> samples, double dt) {
    if (samples.size() < 16) throw DomainError("signal_stats: need at least 16 samples");
    if (!(dt > 0.0)) throw DomainError("signal_stats: dt must be > 0");
    SignalStats stats;
    for (double x : samples) {
        if (!std::isfinite(x)) throw DomainError("signal_stats: non-finite sample");
        stats.f_max = std::max(stats.f_max, std::abs(x));
    }
    const auto power = one_sided_power(samples, Window::Rectangular);
    double total = 0.0;
    for (double p : power) total += p;
    if (total <= 0.0) return stats;

    double cumulative = 0.0;
    bool lower_found = false;
    for (std::size_t k = 0; k < power.size(); ++k) {
        cumulative += power[k];
        const double hz = bin_frequency_hz(k, samples.size(), dt);
        if (!lower_found && cumulative >= kSupportLower * total) {
            stats.w_min = hz;
            lower_found = true;
        }
        if (cumulative >= kSupportUpper * total) {
            stats.w_max = hz;
            break;
        }
    }
    return stats;
}

ForceLabel classify(const SignalStats& stats, const ForceSetBounds& bounds) {
    if (stats.f_max <= bounds.noise_floor) return ForceLabel::Contactless;
    if (stats.f_max > bounds.force_threshold || stats.w_max > bounds.impact_frequency) {
        return ForceLabel::Impact;
    }
    if (stats.f_max < bounds.force_threshold && stats.w_max < bounds.traction_frequency) {
        return ForceLabel::Traction;
    }
    return ForceLabel::Unclassified;
}

ForceClass classify(std::span<const double> samples, double dt, const ForceSetBounds& bounds) {
    validate(bounds);
    const SignalStats stats = signal_stats(samples, dt);
    return {classify(stats, bounds), stats.f_max, stats.w_max, stats.w_min};
}

}  // namespace sfc
