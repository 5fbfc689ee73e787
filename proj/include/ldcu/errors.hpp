#pragma once

#include <stdexcept>
#include <string>

namespace ldcu {

/// Raised when a state with non-positive density or pressure is produced.
/// The message carries whatever location context the thrower has (cell or
/// interface index, RK stage, time); outer layers re-throw with more.
class AdmissibilityError : public std::runtime_error {
public:
    explicit AdmissibilityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid run configuration (bad JSON, unknown key, inadmissible override).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File read/write failure; message names the path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Time loop gave up (step cap exceeded).
class IntegrationError : public std::runtime_error {
public:
    explicit IntegrationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ldcu
