#pragma once

#include <stdexcept>
#include <string>

namespace rlcut {

// Error taxonomy mirrors the CLI exit codes: parse/input errors exit 3,
// dimension/config errors exit 4, size-guard violations exit 5.

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SizeGuardError : std::runtime_error {
    explicit SizeGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rlcut
