#pragma once

#include <stdexcept>
#include <string>

namespace supersol {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two elements built over different (m, n) were combined.
struct DimensionMismatchError : Error {
    using Error::Error;
};

// A generator or coordinate index was outside [1, m] resp. [1, 2n].
struct IndexError : Error {
    using Error::Error;
};

// The Weyl-part degree guard rejected an input.
struct DegreeLimitError : Error {
    using Error::Error;
};

// Coefficients with different powers of pi were added.
struct PiPowerMismatchError : Error {
    using Error::Error;
};

// A closed-form constructor was asked for an unsupported dimension
// (even m, or the empty algebra m = n = 0).
struct UnsupportedDimensionError : Error {
    using Error::Error;
};

// A radial expression with fractional or negative r-powers cannot be
// expanded into coordinates.
struct NotPolynomialError : Error {
    using Error::Error;
};

// Numeric evaluation hit the singular locus (origin with negative r-power).
struct SingularityError : Error {
    using Error::Error;
};

// A bosonic integral does not exist or quadrature failed to converge.
struct DivergenceError : Error {
    using Error::Error;
};

// A caller-supplied kernel sequence violated its descent contract.
struct ContractViolationError : Error {
    int failing_order = 0;
    ContractViolationError(const std::string& msg, int order)
        : Error(msg), failing_order(order) {}
};

}  // namespace supersol
