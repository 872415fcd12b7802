#pragma once

#include <stdexcept>
#include <string>

namespace isacsim {

// Bad or inconsistent configuration input (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parameters violate a model assumption (e.g. the DRV power dominating the
// BS power, which breaks every 1/(1-W) denominator). CLI exit code 2.
class ModelValidityError : public std::domain_error {
public:
    explicit ModelValidityError(const std::string& what) : std::domain_error(what) {}
};

// Numeric degeneracy: contour not found, non-ellipse conic, diverging
// circle center and similar. CLI exit code 4.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace isacsim
