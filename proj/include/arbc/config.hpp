// JSON configuration for the simulator.
//
// Every field is optional and falls back to the built-in defaults, so
// an empty document `{}` reproduces the reference setup. Unknown keys
// are rejected rather than ignored: a typo that silently reverts a
// parameter to its default would poison whole result sets.

#pragma once

#include "arbc/simulator.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace arbc {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Builds a SimConfig from a parsed document and validates it. Shape
/// errors (unknown keys, wrong types) and invariant violations both
/// raise ConfigError.
SimConfig config_from_json(const nlohmann::json& document);

/// Reads, parses, and converts a config file.
SimConfig load_config_file(const std::string& path);

} // namespace arbc
