#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "sens/simulation.hpp"

namespace sens {

enum class ConfigFormat { Json, Toml };

// Keys mirror SimulationConfig. Keys left out keep their value in `base`;
// conditions may be given as [{name, n}, ...] or as a `condition_ns` table
// mapping names to total sample sizes. Throws ConfigError on malformed
// input or an invalid configuration.
SimulationConfig parse_simulation_config(std::string_view text, ConfigFormat format,
                                         SimulationConfig base = SimulationConfig::desk_defaults());

// Format chosen by extension: .toml is TOML, anything else JSON.
SimulationConfig load_simulation_config(const std::filesystem::path& path,
                                        SimulationConfig base = SimulationConfig::desk_defaults());

// TOML document as the equivalent JSON value.
nlohmann::json toml_to_json(std::string_view text);

}  // namespace sens
