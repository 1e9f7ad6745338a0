#include "sfc/signal.hpp"

#include <algorithm>
#include <cmath>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string("input signal: ") + what + " is not finite");
}

struct Validator {
    void operator()(const signal::Step& s) const {
        require_finite(s.force, "step force");
        require_finite(s.onset, "step onset");
    }
    void operator()(const signal::ImpulseProfile& s) const {
        require_finite(s.low, "impulse low force");
        require_finite(s.high, "impulse high force");
        require_finite(s.on, "impulse on time");
        require_finite(s.off, "impulse off time");
        if (s.off < s.on) throw DomainError("input signal: impulse off time precedes on time");
    }
    void operator()(const signal::Sine& s) const {
        require_finite(s.amplitude, "sine amplitude");
        if (!(s.omega > 0.0) || !std::isfinite(s.omega)) {
            throw DomainError("input signal: sine omega must be > 0");
        }
    }
    void operator()(const signal::Recorded& s) const {
        if (s.samples.empty()) throw DomainError("input signal: recording is empty");
        if (!(s.dt > 0.0) || !std::isfinite(s.dt)) throw DomainError("input signal: recording dt must be > 0");
        for (double x : s.samples) require_finite(x, "recorded sample");
    }
    void operator()(const signal::Composite&) const {}
};

struct Evaluator {
    double t;
    double operator()(const signal::Step& s) const { return t >= s.onset ? s.force : 0.0; }
    double operator()(const signal::ImpulseProfile& s) const {
        return (t >= s.on && t < s.off) ? s.high : s.low;
    }
    double operator()(const signal::Sine& s) const { return s.amplitude * std::sin(s.omega * t); }
    double operator()(const signal::Recorded& s) const {
        if (t <= 0.0) return s.samples.front();
        // Small tolerance so t = k dt lands on sample k despite rounding.
        const auto k = static_cast<std::size_t>(std::floor(t / s.dt + 1e-9));
        return s.samples[std::min(k, s.samples.size() - 1)];
    }
    double operator()(const signal::Composite& s) const {
        double sum = 0.0;
        for (const auto& part : s.parts) sum += part.at(t);
        return sum;
    }
};

struct Peak {
    double operator()(const signal::Step& s) const { return std::abs(s.force); }
    double operator()(const signal::ImpulseProfile& s) const {
        return std::max(std::abs(s.low), std::abs(s.high));
    }
    double operator()(const signal::Sine& s) const { return std::abs(s.amplitude); }
    double operator()(const signal::Recorded& s) const {
        double m = 0.0;
        for (double x : s.samples) m = std::max(m, std::abs(x));
        return m;
    }
    double operator()(const signal::Composite& s) const {
        double sum = 0.0;
        for (const auto& part : s.parts) sum += part.peak();
        return sum;
    }
};

}  // namespace

InputSignal::InputSignal(Kind kind) : kind_(std::move(kind)) {
    std::visit(Validator{}, kind_);
}

InputSignal InputSignal::step(double force, double onset) {
    return InputSignal(signal::Step{force, onset});
}

InputSignal InputSignal::impulse(double low, double high, double on, double off) {
    return InputSignal(signal::ImpulseProfile{low, high, on, off});
}

InputSignal InputSignal::sine(double amplitude, double omega) {
    return InputSignal(signal::Sine{amplitude, omega});
}

InputSignal InputSignal::recorded(std::vector<double> samples, double dt) {
    return InputSignal(signal::Recorded{std::move(samples), dt});
}

InputSignal InputSignal::composite(std::vector<InputSignal> parts) {
    return InputSignal(signal::Composite{std::move(parts)});
}

InputSignal InputSignal::traction_with_impact() {
    return impulse(5.0, 50.0, 0.6, 1.0);
}

double InputSignal::at(double t) const {
    return std::visit(Evaluator{t}, kind_);
}

double InputSignal::peak() const {
    return std::visit(Peak{}, kind_);
}

}  // namespace sfc
