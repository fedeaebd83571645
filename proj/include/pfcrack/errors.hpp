#pragma once

#include <stdexcept>
#include <string>

namespace pfcrack {

// Invalid user input: bad config values, malformed files, shape mismatches.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver/training failures: singular systems, non-convergence, non-finite fields.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pfcrack
