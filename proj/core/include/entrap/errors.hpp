// errors.hpp: exception types shared by the engine

#pragma once

#include <stdexcept>
#include <string>

namespace entrap {

// Argument outside the mathematical domain of an operation (negative
// frequency, non-negative energy where E < 0 is required, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure did not reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double error_estimate)
        : std::runtime_error(what), error_estimate_(error_estimate) {}

    double error_estimate() const noexcept { return error_estimate_; }

private:
    double error_estimate_;
};

// The amplitude solver detected norm growth beyond its tolerance band;
// the remedy is a smaller time step.
class StepSizeError : public NumericalError {
public:
    StepSizeError(const std::string& what, double excess)
        : NumericalError(what, excess) {}
};

} // namespace entrap
