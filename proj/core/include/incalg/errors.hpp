#pragma once

#include <stdexcept>
#include <string>

namespace incalg {

/// Malformed or inconsistent input: unknown labels, ring mismatches,
/// violated preconditions. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Arithmetic that has no answer in the ring (e.g. inverting zero).
class ArithmeticError : public std::domain_error {
public:
	using std::domain_error::domain_error;
};

/// An internal consistency check failed. Indicates a bug.
class InvariantViolation : public std::logic_error {
public:
	using std::logic_error::logic_error;
};

} // namespace incalg
