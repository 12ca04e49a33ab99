#pragma once

#include <stdexcept>
#include <string>

namespace filabm {

/// Invalid configuration or schema violation (CLI exit code 1).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input data (CLI exit code 1).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The model reached an invalid state, e.g. a token pool went negative
/// (CLI exit code 2).
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace filabm
