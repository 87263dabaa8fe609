#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wastefactor/cascade.hpp"
#include "wastefactor/datacenter.hpp"
#include "wastefactor/network.hpp"
#include "wastefactor/radio_link.hpp"

namespace wastefactor::io {

// One profile evaluates; two compare.
struct DataCenterInput {
  std::vector<DataCenterProfile> profiles;

  bool operator==(const DataCenterInput&) const = default;
};

struct LinkConfig {
  RadioProfile profile;
  double distance_m = 100.0;
  bool los = true;
  Direction direction = Direction::kDownlink;
  CefMode cef_mode = CefMode::kTotal;

  bool operator==(const LinkConfig&) const = default;
};

using ConfigDocument = std::variant<CascadeSpec, DataCenterInput, LinkConfig, ScenarioConfig>;

// Parses any config document. The kind comes from a top-level "kind" member
// when present, otherwise from the members present. A run manifest is
// accepted too; its embedded config is returned.
//
// Errors throw ConfigError with a JSON path such as "$.stages[2].loss_db".
ConfigDocument parse_config(std::string_view document);

CascadeSpec parse_cascade(std::string_view document);
DataCenterInput parse_datacenter(std::string_view document);
LinkConfig parse_link(std::string_view document);
ScenarioConfig parse_scenario(std::string_view document);
RadioProfile parse_radio_profile(std::string_view document);

// Canonical JSON echoes. parse_config(echo(x)) reproduces x.
std::string echo(const CascadeSpec& cascade);
std::string echo(const DataCenterInput& input);
std::string echo(const LinkConfig& link);
std::string echo(const ScenarioConfig& scenario);
std::string echo(const RadioProfile& profile);
std::string echo(const ConfigDocument& document);

// Built-in band presets, "28ghz" and "142ghz".
std::vector<std::string> preset_names();
std::string_view preset_document(std::string_view name);
RadioProfile radio_preset(std::string_view name);

// Both presets, 100 UEs, one BS, seed 1, both directions, total-mode CEF.
// Sweeps: PS loss 0..14 dB in 2 dB steps, UE count 10..100, BS count 1..7.
ScenarioConfig default_scenario(SweepParameter parameter);

}  // namespace wastefactor::io
