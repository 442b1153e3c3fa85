#pragma once

#include <stdexcept>

namespace tripleslit {

// Process exit codes used by the command-line front end.
enum class ExitCode : int {
    ok = 0,
    config_error = 2,
    numeric_error = 3,
    io_error = 4,
};

// Invalid physical parameters or malformed configuration input.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate intermediate quantities, branch ambiguities, or failed
// numerical convergence.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tripleslit
