#pragma once

#include <stdexcept>
#include <string>

namespace colearn {

/// Invalid configuration value. `field()` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Two tuples that must share a length did not.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class AggregationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace colearn
