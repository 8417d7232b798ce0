#pragma once

#include <stdexcept>
#include <string>

namespace meetsim {

// Invalid or contradictory user configuration (bad file, unknown key, bad value).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A scenario that cannot meet its target within the configured search bounds.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace meetsim
