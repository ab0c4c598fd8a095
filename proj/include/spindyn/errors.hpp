#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spindyn {

/// Invalid scenario or parameter combination. Carries every violation found.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> violations);
    explicit ConfigError(const std::string& violation) : ConfigError(std::vector<std::string>{violation}) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// Formulation used outside its validity regime (e.g. a gradient field with
/// the homogeneous-field spin equations).
class RegimeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Numerical breakdown during evolution: non-finite state, or a field strong
/// enough that the spin mass is no longer positive.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable file, or an input file that does not parse.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace spindyn
