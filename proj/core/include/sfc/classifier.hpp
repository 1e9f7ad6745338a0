#pragma once

#include <span>
#include <string_view>

namespace sfc {

/// Thresholds separating contactless, traction and impact forces.
struct ForceSetBounds {
    double force_threshold = 0.0;    // f_th [N]
    double impact_frequency = 0.0;   // eps+ [Hz]
    double traction_frequency = 0.0; // eps- [Hz], <= impact_frequency
    double noise_floor = 1e-9;       // [N]
};

void validate(const ForceSetBounds& bounds);

/// Amplitude and frequency support of a force record.
struct SignalStats {
    double f_max = 0.0;      // max |sample| [N]
    double w_max = 0.0;      // [Hz] where cumulative power from DC first reaches 99%
    double w_min = 0.0;      // [Hz] where cumulative power from DC first reaches 1%
};

enum class ForceLabel { Contactless, Traction, Impact, Unclassified };

std::string_view to_string(ForceLabel label);

struct ForceClass {
    ForceLabel label = ForceLabel::Unclassified;
    double f_max = 0.0;  // [N]
    double w_max = 0.0;  // [Hz]
    double w_min = 0.0;  // [Hz], reported only
};

/// Uses the rectangular-window one-sided power spectrum. Needs >= 16 samples.
SignalStats signal_stats(std::span<const double> samples, double dt);

/// Contactless if f_max <= noise floor; Impact if f_max > f_th or w_max > eps+;
/// Traction if f_max < f_th and w_max < eps-; otherwise Unclassified.
ForceClass classify(std::span<const double> samples, double dt, const ForceSetBounds& bounds);

/// Rule application on precomputed statistics.
ForceLabel classify(const SignalStats& stats, const ForceSetBounds& bounds);

}  // namespace sfc
