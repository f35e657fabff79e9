#pragma once

#include "certinv/harness.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace certinv {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Setting = std::pair<std::string, std::string>;

/// Parse flat `key = value` lines. `#` starts a comment, values may be
/// double-quoted, blank lines are ignored.
std::vector<Setting> parse_settings(const std::string& text);
std::vector<Setting> read_settings(const std::filesystem::path& path);

/// Set one key; throws ConfigError naming the key if it is unknown or the
/// value does not parse.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Known keys, in documentation order.
const std::vector<std::string>& config_keys();

/// Start from the scenario defaults (scenario taken from the last
/// `scenario` entry, else periodic), then apply every setting in order.
RunConfig build_config(const std::vector<Setting>& settings);

/// Key/value text that build_config reads back to the same config.
std::string dump_config(const RunConfig& config);

/// Key -> value pairs of a config, in config_keys() order.
std::vector<Setting> config_values(const RunConfig& config);

} // namespace certinv
