#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ancat {

/// Invalid input value: out-of-domain grid point, bad object, malformed quiver.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parse failure with the byte offset of the first offending character.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)),
          offset(offset) {}
    std::size_t offset;
};

/// A search window (shift range) was too small to contain the answer.
struct WindowExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was invoked beyond its documented cost guard.
struct CostGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal contract failed; signals a model bug, never bad user input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ancat
