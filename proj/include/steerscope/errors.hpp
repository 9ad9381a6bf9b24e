#pragma once

#include <stdexcept>
#include <string>

namespace steerscope {

// Raised when an argument falls outside an operation's domain
// (dimension mismatch, bad qubit subset, unknown name, p outside [0,1], ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Invariant { Hermitian, UnitTrace, PositiveSemidefinite, Dimension };

const char* to_string(Invariant inv);

// A matrix failed density-matrix validation. Carries which invariant
// was violated and by how much.
class ValidationError : public std::runtime_error {
public:
    ValidationError(Invariant which, double magnitude);

    Invariant which() const noexcept { return which_; }
    double magnitude() const noexcept { return magnitude_; }

private:
    Invariant which_;
    double magnitude_;
};

}  // namespace steerscope

namespace steerscope {

// Malformed input text (JSON syntax, wrong field types or lengths).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace steerscope
