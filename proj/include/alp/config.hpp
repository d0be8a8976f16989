#pragma once

#include <map>
#include <string>
#include <vector>

#include "alp/simulation.hpp"

namespace alp::cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat INI-style document: [section] headers, key = value lines, '#'
/// comments. Repeated keys append (used by [loops] loop = ...).
struct ConfigDocument {
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;

  static ConfigDocument parse(const std::string& text);
  std::string serialize() const;
  bool operator==(const ConfigDocument&) const = default;
};

/// Validate and resolve into a SimConfig; throws ConfigError naming the
/// offending key. Unknown sections or keys are rejected.
sim::SimConfig resolve_config(const ConfigDocument& doc);

/// Re-emit a resolved SimConfig as a config document (the round-trip surface).
ConfigDocument to_document(const sim::SimConfig& cfg);

struct Preset {
  std::string name;
  std::string description;
  std::string runtime_class;
  std::string text;
};
const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace alp::cli
