#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace socle {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based byte offset of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
public:
    explicit RingMismatch(const std::string& where) : Error("ring mismatch in " + where) {}
};

/// An operation was called outside its domain. The message names the operation.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& operation, const std::string& message)
        : Error(operation + ": " + message), operation_(operation) {}

    const std::string& operation() const noexcept { return operation_; }

private:
    std::string operation_;
};

/// A coefficient fit found no polynomial regime, or a non-integral one.
class FitError : public Error {
public:
    using Error::Error;
};

}  // namespace socle
