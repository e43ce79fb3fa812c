#pragma once

#include <stdexcept>
#include <string>

namespace rind {

/// Malformed input document (graph / complex / certificate files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured size limit was exceeded. Every algorithm here is exponential,
/// so breaching a guard fails fast instead of grinding.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rind
