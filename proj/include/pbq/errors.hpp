#pragma once

#include <stdexcept>
#include <string>

namespace pbq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// q in {+1, -1, +i, -i}, where the deformed brackets degenerate.
struct UndefinedParameterError : Error {
    using Error::Error;
};

// Exact and Approx scalars may only be combined through an explicit downgrade.
struct VariantMixError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position(position) {}
    std::size_t position;
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct InvalidQuotientError : Error {
    using Error::Error;
};

struct MismatchError : Error {
    using Error::Error;
};

// Unitarity machinery requires a real weight.
struct UnsupportedWeightError : Error {
    using Error::Error;
};

// Orthonormal construction refused outside the strictly unitarizable region.
struct NotUnitarizableError : Error {
    using Error::Error;
};

}  // namespace pbq
