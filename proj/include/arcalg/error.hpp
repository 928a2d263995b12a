#pragma once

#include <stdexcept>
#include <string>

namespace arcalg {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (weights, diagrams, elements).
struct ParseError : Error {
    using Error::Error;
};

// Operands taken from incompatible blocks or number lines.
struct BlockMismatch : Error {
    using Error::Error;
};

// A documented precondition was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct ContractViolation : Error {
    using Error::Error;
};

// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

} // namespace arcalg
