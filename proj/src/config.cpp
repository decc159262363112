#include "sens/config.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <toml.hpp>

#include "sens/errors.hpp"
#include "sens/serialize.hpp"

using nlohmann::json;

namespace sens {
namespace {

json node_to_json(const toml::node& node) {
  if (const auto* table = node.as_table()) {
    json out = json::object();
    for (const auto& [key, value] : *table) out[std::string(key.str())] = node_to_json(value);
    return out;
  }
  if (const auto* array = node.as_array()) {
    json out = json::array();
    for (const auto& value : *array) out.push_back(node_to_json(value));
    return out;
  }
  if (const auto* v = node.as_integer()) return v->get();
  if (const auto* v = node.as_floating_point()) return v->get();
  if (const auto* v = node.as_boolean()) return v->get();
  if (const auto* v = node.as_string()) return v->get();
  throw ConfigError("unsupported TOML value (dates and times are not accepted)");
}

}  // namespace

json toml_to_json(std::string_view text) {
  try {
    const toml::table table = toml::parse(text);
    return node_to_json(table);
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << "TOML parse error at line " << e.source().begin.line << ": " << e.description();
    throw ConfigError(msg.str());
  }
}

SimulationConfig parse_simulation_config(std::string_view text, ConfigFormat format,
                                         SimulationConfig base) {
  json document;
  if (format == ConfigFormat::Toml) {
    document = toml_to_json(text);
  } else {
    try {
      document = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
  }
  SimulationConfig config = std::move(base);
  try {
    document.get_to(config);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad configuration value: ") + e.what());
  } catch (const std::logic_error& e) {
    throw ConfigError(std::string("bad configuration value: ") + e.what());
  }
  config.validate();
  return config;
}

SimulationConfig load_simulation_config(const std::filesystem::path& path,
                                        SimulationConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const ConfigFormat format = path.extension() == ".toml" ? ConfigFormat::Toml : ConfigFormat::Json;
  return parse_simulation_config(buffer.str(), format, std::move(base));
}

}  // namespace sens
