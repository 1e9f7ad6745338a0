#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfc {

// Argument outside the mathematical domain of an operation (non-finite input,
// non-positive parameter, empty band, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A linear-algebra or root-finding step failed in a way the caller could not
// have prevented by validating inputs.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requirements that admit no controller (the fitted exponent is <= 1, or the
// velocity/force orderings are violated).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simulation/analysis configuration is inconsistent (too short, wrong input
// kind, unknown preset, malformed file).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A measured quantity could not be located in the data (no -3 dB crossing,
// no steady state).
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t step, const std::string& what)
        : std::runtime_error(what), step_(step) {}

    std::size_t step_index() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace sfc
