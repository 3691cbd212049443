#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for all errors raised by the library.
struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParameter final : RingError {
    using RingError::RingError;
};

struct SizeCapExceeded final : RingError {
    std::size_t requested = 0;
    std::size_t cap = 0;
    SizeCapExceeded(std::size_t requested_, std::size_t cap_, const std::string& what_)
        : RingError("size cap exceeded: " + what_ + " (requested " + std::to_string(requested_) +
                    ", cap " + std::to_string(cap_) + ")"),
          requested(requested_),
          cap(cap_) {}
};

struct NotAnIdeal final : RingError {
    using RingError::RingError;
};

struct NotCentralParameter final : RingError {
    using RingError::RingError;
};

struct CharacteristicMismatch final : RingError {
    using RingError::RingError;
};

struct NotCommutative final : RingError {
    using RingError::RingError;
};

struct NotReduced final : RingError {
    using RingError::RingError;
};

/// A structured-ring multiplication produced a matrix outside the ring's
/// parameter pattern. Reported, never silently repaired.
struct ClosureViolation final : RingError {
    using RingError::RingError;
};

struct UnknownClaim final : RingError {
    using RingError::RingError;
};

struct ParseError final : RingError {
    std::size_t position = 0;
    ParseError(std::size_t position_, const std::string& message)
        : RingError("parse error at offset " + std::to_string(position_) + ": " + message),
          position(position_) {}
};

}  // namespace ringlab
