#pragma once

#include <stdexcept>
#include <string>

#include <gwmirror/rational.hpp>

namespace gwmirror {

// Order mismatch, insufficient caps, malformed shapes.
struct StructuralError : std::logic_error {
    using std::logic_error::logic_error;
};

// Operation is undefined on the given input (exp of a nonzero constant,
// division by a non-unit, repeated lambda values, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation of an hbar-rational function at one of its poles.
struct PoleError : std::domain_error {
    Rational point;
    explicit PoleError(const Rational& at)
        : std::domain_error("pole at hbar = " + to_string(at)), point(at) {}
};

// A correlator family failed one of the class-P conditions.
struct ClassPViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weight vanishes where it has to be inverted; caller should resample lambda.
struct DegenerateLambdaError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace gwmirror
