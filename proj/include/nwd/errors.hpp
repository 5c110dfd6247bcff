#pragma once

#include <stdexcept>
#include <string>

namespace nwd {

/// A box with nonpositive width/height or non-finite coordinates.
class InvalidBoxError : public std::invalid_argument {
public:
    explicit InvalidBoxError(const std::string& what) : std::invalid_argument(what) {}
};

/// A Gaussian whose covariance cannot be inverted (zero/negative diagonal entry).
class SingularCovarianceError : public std::domain_error {
public:
    explicit SingularCovarianceError(const std::string& what) : std::domain_error(what) {}
};

/// Bad configuration values (thresholds, normalization constant, grid specs, ...).
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problems with input data: missing files, malformed JSON, bad records,
/// statistics that are undefined for the given data.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nwd
