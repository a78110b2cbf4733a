#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

// Raised when an input is outside an operation's domain (bad label, N = 0, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when a configured size cutoff would be exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a mathematical check the caller relies on fails
// (e.g. a monodromy condition, or decomposition peeling stalls).
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace braidlab
