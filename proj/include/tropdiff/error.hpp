#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropdiff {

/// Malformed arguments: mixed arities, negative exponents, out-of-range indices.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation needs coefficients that a truncated series does not know.
class PrecisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient fields.
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Enumeration request larger than the configured candidate cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    std::size_t estimate() const noexcept { return estimate_; }

private:
    std::size_t estimate_;
};

/// Syntax error in the text DSL; `position` is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace tropdiff
