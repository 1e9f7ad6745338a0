#pragma once

#include <variant>
#include <vector>

namespace sfc {

class InputSignal;

namespace signal {

/// force for t >= onset, 0 before.
struct Step {
    double force = 0.0;  // [N]
    double onset = 0.0;  // [s]
};

/// low for t < on, high for on <= t < off, low again afterwards.
struct ImpulseProfile {
    double low = 0.0;   // [N]
    double high = 0.0;  // [N]
    double on = 0.0;    // [s]
    double off = 0.0;   // [s]
};

/// amplitude sin(omega t).
struct Sine {
    double amplitude = 0.0;  // [N]
    double omega = 0.0;      // [rad/s]
};

/// Uniformly sampled force, held between samples and after the last one.
struct Recorded {
    std::vector<double> samples;  // [N]
    double dt = 0.0;              // [s]
};

struct Composite {
    std::vector<InputSignal> parts;  // summed
};

}  // namespace signal

/// External force as a function of time.
class InputSignal {
public:
    using Kind = std::variant<signal::Step, signal::ImpulseProfile, signal::Sine,
                              signal::Recorded, signal::Composite>;

    InputSignal() : kind_(signal::Step{}) {}
    InputSignal(Kind kind);  // validates, throws DomainError

    static InputSignal step(double force, double onset = 0.0);
    static InputSignal impulse(double low, double high, double on, double off);
    static InputSignal sine(double amplitude, double omega);
    static InputSignal recorded(std::vector<double> samples, double dt);
    static InputSignal composite(std::vector<InputSignal> parts);

    /// The 5 N / 50 N / 5 N traction-plus-impact profile (impact on [0.6 s, 1 s)).
    static InputSignal traction_with_impact();

    double at(double t) const;

    /// Largest |force| the signal can produce.
    double peak() const;

    const Kind& kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace sfc
