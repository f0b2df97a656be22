#pragma once

#include <stdexcept>
#include <string>

namespace fracmont {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An integrand violated one of its construction invariants.
class InvalidIntegrand : public Error {
public:
    using Error::Error;
};

/// The integrand returned NaN or infinity at a quadrature node.
class NonFiniteSample : public Error {
public:
    explicit NonFiniteSample(double t)
        : Error("integrand returned a non-finite value at t = " + std::to_string(t)),
          location(t) {}
    double location;
};

/// The subdivision limit was reached before the requested tolerance.
/// Carries the best value and error estimate obtained so far.
class ToleranceNotMet : public Error {
public:
    ToleranceNotMet(double value, double estimate)
        : Error("quadrature tolerance not met (best estimate " +
                std::to_string(value) + " +/- " + std::to_string(estimate) + ")"),
          best_value(value), err_estimate(estimate) {}
    double best_value;
    double err_estimate;
};

/// A fractional order outside the operator's admissible range.
class InvalidOrder : public Error {
public:
    using Error::Error;
};

/// A kernel was queried outside [a,b].
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// Corpus lookup failed: the name is not registered.
class UnknownName : public Error {
public:
    using Error::Error;
};

/// Corpus lookup failed: the requested interval is degenerate (a >= b).
class DomainInvalid : public Error {
public:
    using Error::Error;
};

/// A domain object (TestFunction, WeightFunction, ProblemFrame) failed
/// its construction invariants.
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace fracmont
