#pragma once

#include <stdexcept>
#include <string>

namespace bipyr {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; `byte` is the offset into the input where parsing stopped.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t byte_pos)
        : Error(msg), byte(byte_pos) {}
    std::size_t byte;
};

// Structurally well-formed input that violates a diagram invariant.
struct ValidationError : Error {
    using Error::Error;
};

// An internal cross-check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace bipyr
