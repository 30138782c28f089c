#ifndef SCPKIT_ERRORS_HPP
#define SCPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scpkit {

// Input shape is wrong for the requested operation (non-square determinant,
// asymmetric PSD test, dimension mismatch, missing table entries, ...).
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Ran b is not contained in Ran a.
struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A moment table does not reach the degree an operation needs.
struct DegreeError : std::invalid_argument {
    explicit DegreeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A moment or weight that must be positive is zero (or negative).
struct PositivityError : std::runtime_error {
    explicit PositivityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Weights violate a required strict ordering.
struct OrderError : std::invalid_argument {
    explicit OrderError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Definitive negative verdict: the data admits no subnormal completion.
struct NoCompletionError : std::runtime_error {
    explicit NoCompletionError(const std::string& msg) : std::runtime_error(msg) {}
};

// singular_m2 was called with an invertible moment matrix.
struct NotSingularError : std::invalid_argument {
    explicit NotSingularError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Explicit completion requested beyond the supported degree.
struct UnsupportedDegreeError : std::invalid_argument {
    explicit UnsupportedDegreeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// An internal invariant tripped; results cannot be trusted.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

// Malformed instance text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed text, invalid content (nonpositive weight, unknown field, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace scpkit

#endif // SCPKIT_ERRORS_HPP
