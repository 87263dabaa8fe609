#include "wastefactor/config.hpp"

#include <cmath>
#include <map>
#include <set>

#include "json.hpp"
#include "wastefactor/devices.hpp"
#include "wastefactor/errors.hpp"
#include "wastefactor/units.hpp"

namespace wastefactor::io {
namespace {

using nlohmann::json;

// Table values are verbatim; LNA noise figure, PA gain and PA output powers
// are not tabulated and carry the library defaults.
constexpr std::string_view kPreset28 = R"({
  "name": "28ghz",
  "carrier_frequency_ghz": 28,
  "bandwidth_hz": 400000000,
  "bs_aperture_m2": 0.5,
  "ue_aperture_m2": 0.0005,
  "bs_antenna_gain_dbi": 45.2,
  "ue_antenna_gain_dbi": 15.2,
  "ple_los": 2.0,
  "ple_nlos": 3.2,
  "bs_elements": 1024,
  "ue_elements": 8,
  "lna_fom_per_mw": 24.83,
  "lna_gain_db": 20,
  "lna_noise_figure_db": 3,
  "mixer_loss_db": 6,
  "ps_loss_db": 10,
  "lo_power_dbm": 10,
  "pa_efficiency": 0.28,
  "pa_gain_db": 20,
  "antenna_efficiency": 0.6,
  "cooling_overhead": 0.2,
  "ue_screen_power_w": 0.5,
  "bs_pa_output_dbm": 30,
  "ue_pa_output_dbm": 23
})";

constexpr std::string_view kPreset142 = R"({
  "name": "142ghz",
  "carrier_frequency_ghz": 142,
  "bandwidth_hz": 4000000000,
  "bs_aperture_m2": 0.5,
  "ue_aperture_m2": 0.0005,
  "bs_antenna_gain_dbi": 59.1,
  "ue_antenna_gain_dbi": 29.1,
  "ple_los": 2.0,
  "ple_nlos": 3.2,
  "bs_elements": 4096,
  "ue_elements": 64,
  "lna_fom_per_mw": 8.33,
  "lna_gain_db": 20,
  "lna_noise_figure_db": 7,
  "mixer_loss_db": 6,
  "ps_loss_db": 10,
  "lo_power_dbm": 19.9,
  "pa_efficiency": 0.208,
  "pa_gain_db": 20,
  "antenna_efficiency": 0.6,
  "cooling_overhead": 0.2,
  "ue_screen_power_w": 0.5,
  "bs_pa_output_dbm": 30,
  "ue_pa_output_dbm": 23
})";

std::string type_name(const json& j) { return j.type_name(); }

json parse_json(std::string_view document) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("malformed JSON: ") + e.what());
  }
}

// Reads members of one JSON object, tracking which were consumed so that
// unknown members can be reported.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_, "expected object, got " + type_name(j_));
  }

  const std::string& path() const { return path_; }
  std::string member_path(std::string_view key) const {
    return path_ + "." + std::string(key);
  }

  bool has(std::string_view key) const { return j_.contains(key); }

  const json* find(std::string_view key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    seen_.insert(std::string(key));
    return &*it;
  }

  const json& require(std::string_view key) {
    const json* v = find(key);
    if (!v) throw ConfigError(member_path(key), "missing required field");
    return *v;
  }

  double number(std::string_view key) { return as_number(require(key), member_path(key)); }

  double number_or(std::string_view key, double fallback) {
    const json* v = find(key);
    return v ? as_number(*v, member_path(key)) : fallback;
  }

  std::string string(std::string_view key) {
    const json& v = require(key);
    if (!v.is_string()) throw ConfigError(member_path(key), "expected string");
    return v.get<std::string>();
  }

  std::string string_or(std::string_view key, std::string fallback) {
    return has(key) ? string(key) : fallback;
  }

  bool boolean_or(std::string_view key, bool fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) throw ConfigError(member_path(key), "expected boolean");
    return v->get<bool>();
  }

  int count_or(std::string_view key, int fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_integer()) throw ConfigError(member_path(key), "expected integer");
    const auto n = v->get<long long>();
    if (n < 1 || n > 10'000'000) throw ConfigError(member_path(key), "must be in [1, 1e7]");
    return static_cast<int>(n);
  }

  // Rejects members that were never read.
  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) throw ConfigError(member_path(it.key()), "unknown field");
    }
  }

  static double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) throw ConfigError(path, "expected number, got " + type_name(v));
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path, "must be finite");
    return x;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

// Runs a library validator and re-labels its InvalidInput with a JSON path.
template <class Fn>
auto at_path(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ConfigError(path, e.what());
  }
}

void check(bool ok, const std::string& path, const std::string& what) {
  if (!ok) throw ConfigError(path, what);
}

// ---------------------------------------------------------------- profiles

std::string_view find_preset(std::string_view name) {
  if (name == "28ghz") return kPreset28;
  if (name == "142ghz") return kPreset142;
  return {};
}

RadioProfile read_profile(const json& j, const std::string& path);

RadioProfile profile_from(const json& j, const std::string& path) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (find_preset(name).empty()) throw ConfigError(path, "unknown band preset '" + name + "'");
    return read_profile(json::parse(find_preset(name)), path);
  }
  return read_profile(j, path);
}

RadioProfile read_profile(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  RadioProfile p;
  bool from_preset = false;
  if (r.has("preset")) {
    const json& preset = r.require("preset");
    check(preset.is_string(), r.member_path("preset"), "expected string");
    p = profile_from(preset, r.member_path("preset"));
    from_preset = true;
  }

  auto num = [&](std::string_view key, double& field) {
    field = from_preset ? r.number_or(key, field) : r.number(key);
  };
  auto count = [&](std::string_view key, int& field) {
    if (!from_preset) r.require(key);
    field = r.count_or(key, field);
  };

  p.name = r.string_or("name", from_preset ? p.name : "custom");
  num("carrier_frequency_ghz", p.carrier_frequency_ghz);
  num("bandwidth_hz", p.bandwidth_hz);
  num("bs_aperture_m2", p.bs_aperture_m2);
  num("ue_aperture_m2", p.ue_aperture_m2);
  num("bs_antenna_gain_dbi", p.bs_antenna_gain_dbi);
  num("ue_antenna_gain_dbi", p.ue_antenna_gain_dbi);
  num("ple_los", p.ple_los);
  num("ple_nlos", p.ple_nlos);
  count("bs_elements", p.bs_elements);
  count("ue_elements", p.ue_elements);
  num("lna_fom_per_mw", p.lna_fom_per_mw);
  num("lna_gain_db", p.lna_gain_db);
  num("lna_noise_figure_db", p.lna_noise_figure_db);
  num("mixer_loss_db", p.mixer_loss_db);
  num("ps_loss_db", p.ps_loss_db);
  num("lo_power_dbm", p.lo_power_dbm);
  num("pa_efficiency", p.pa_efficiency);
  num("pa_gain_db", p.pa_gain_db);
  num("antenna_efficiency", p.antenna_efficiency);
  num("cooling_overhead", p.cooling_overhead);
  num("ue_screen_power_w", p.ue_screen_power_w);
  num("bs_pa_output_dbm", p.bs_pa_output_dbm);
  num("ue_pa_output_dbm", p.ue_pa_output_dbm);
  r.finish();

  at_path(path, [&] { validate(p); return 0; });
  return p;
}

json profile_json(const RadioProfile& p) {
  return json{{"name", p.name},
              {"carrier_frequency_ghz", p.carrier_frequency_ghz},
              {"bandwidth_hz", p.bandwidth_hz},
              {"bs_aperture_m2", p.bs_aperture_m2},
              {"ue_aperture_m2", p.ue_aperture_m2},
              {"bs_antenna_gain_dbi", p.bs_antenna_gain_dbi},
              {"ue_antenna_gain_dbi", p.ue_antenna_gain_dbi},
              {"ple_los", p.ple_los},
              {"ple_nlos", p.ple_nlos},
              {"bs_elements", p.bs_elements},
              {"ue_elements", p.ue_elements},
              {"lna_fom_per_mw", p.lna_fom_per_mw},
              {"lna_gain_db", p.lna_gain_db},
              {"lna_noise_figure_db", p.lna_noise_figure_db},
              {"mixer_loss_db", p.mixer_loss_db},
              {"ps_loss_db", p.ps_loss_db},
              {"lo_power_dbm", p.lo_power_dbm},
              {"pa_efficiency", p.pa_efficiency},
              {"pa_gain_db", p.pa_gain_db},
              {"antenna_efficiency", p.antenna_efficiency},
              {"cooling_overhead", p.cooling_overhead},
              {"ue_screen_power_w", p.ue_screen_power_w},
              {"bs_pa_output_dbm", p.bs_pa_output_dbm},
              {"ue_pa_output_dbm", p.ue_pa_output_dbm}};
}

// ----------------------------------------------------------------- cascade

StageSpec read_stage(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  const std::string kind = r.string("kind");
  std::string name = r.string_or("name", kind);

  return at_path(path, [&]() -> StageSpec {
    if (kind == "passive") {
      const double loss = r.number("loss_db");
      check(loss >= 0.0, r.member_path("loss_db"), "must be >= 0");
      r.finish();
      return passive_stage(loss, name);
    }
    if (kind == "antenna") {
      const double eff = r.number("efficiency");
      check(eff > 0.0 && eff <= 1.0, r.member_path("efficiency"), "must lie in (0, 1]");
      r.finish();
      return antenna_stage(eff, name);
    }
    if (kind == "pa") {
      const double eff = r.number("efficiency");
      check(eff > 0.0 && eff <= 1.0, r.member_path("efficiency"), "must lie in (0, 1]");
      const double gain_db = r.number("gain_db");
      const double nf_db = r.number_or("noise_figure_db", 0.0);
      check(nf_db >= 0.0, r.member_path("noise_figure_db"), "must be >= 0");
      r.finish();
      return pa_stage(eff, db_to_linear(gain_db), db_to_linear(nf_db), name);
    }
    if (kind == "generic") {
      check(r.has("gain") != r.has("gain_db"), path, "exactly one of gain, gain_db is required");
      const double gain = r.has("gain") ? r.number("gain") : db_to_linear(r.number("gain_db"));
      check(gain > 0.0, r.member_path("gain"), "must be > 0");
      const double w = r.number("waste_factor");
      check(w >= 1.0, r.member_path("waste_factor"), "must be >= 1");
      check(!(r.has("noise_factor") && r.has("noise_figure_db")), path,
            "at most one of noise_factor, noise_figure_db");
      double f = 1.0;
      if (r.has("noise_factor")) {
        f = r.number("noise_factor");
        check(f >= 1.0, r.member_path("noise_factor"), "must be >= 1");
      } else if (r.has("noise_figure_db")) {
        const double nf_db = r.number("noise_figure_db");
        check(nf_db >= 0.0, r.member_path("noise_figure_db"), "must be >= 0");
        f = db_to_linear(nf_db);
      }
      r.finish();
      return StageSpec::make(name, gain, w, f);
    }
    throw ConfigError(r.member_path("kind"),
                      "unknown stage kind '" + kind + "' (passive, antenna, pa, generic)");
  });
}

CascadeSpec read_cascade(const json& j) {
  ObjectReader r(j, "$");
  r.find("kind");
  CascadeSpec c;
  c.source_power_w = r.number_or("source_power_w", 1.0);
  check(c.source_power_w > 0.0, "$.source_power_w", "must be > 0");
  const json& stages = r.require("stages");
  check(stages.is_array(), "$.stages", "expected array");
  check(!stages.empty(), "$.stages", "empty cascade");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    c.stages.push_back(read_stage(stages[i], "$.stages[" + std::to_string(i) + "]"));
  }
  r.finish();
  return c;
}

json cascade_json(const CascadeSpec& c) {
  json stages = json::array();
  for (const auto& s : c.stages) {
    stages.push_back({{"kind", "generic"},
                      {"name", s.name},
                      {"gain", s.gain},
                      {"waste_factor", s.waste_factor},
                      {"noise_factor", s.noise_factor}});
  }
  return json{{"kind", "cascade"}, {"source_power_w", c.source_power_w}, {"stages", stages}};
}

// -------------------------------------------------------------- datacenter

DataCenterProfile read_dc_profile(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  DataCenterProfile p{r.number("p_info"), r.number("p_non_info"), r.number("p_aux")};
  r.finish();
  check(p.p_info > 0.0, r.member_path("p_info"), "must be > 0");
  check(p.p_non_info >= 0.0, r.member_path("p_non_info"), "must be >= 0");
  check(p.p_aux >= 0.0, r.member_path("p_aux"), "must be >= 0");
  return p;
}

DataCenterInput read_datacenter(const json& j) {
  DataCenterInput in;
  if (j.is_object() && (j.contains("a") || j.contains("b"))) {
    ObjectReader r(j, "$");
    r.find("kind");
    in.profiles.push_back(read_dc_profile(r.require("a"), "$.a"));
    in.profiles.push_back(read_dc_profile(r.require("b"), "$.b"));
    r.finish();
    return in;
  }
  json body = j;
  if (body.is_object()) body.erase("kind");
  in.profiles.push_back(read_dc_profile(body, "$"));
  return in;
}

json dc_profile_json(const DataCenterProfile& p) {
  return json{{"p_info", p.p_info}, {"p_non_info", p.p_non_info}, {"p_aux", p.p_aux}};
}

json datacenter_json(const DataCenterInput& in) {
  if (in.profiles.size() == 2) {
    return json{{"kind", "datacenter"},
                {"a", dc_profile_json(in.profiles[0])},
                {"b", dc_profile_json(in.profiles[1])}};
  }
  json out = dc_profile_json(in.profiles.at(0));
  out["kind"] = "datacenter";
  return out;
}

// -------------------------------------------------------------- link/scenario

Direction read_direction(const std::string& s, const std::string& path) {
  if (s == "up") return Direction::kUplink;
  if (s == "down") return Direction::kDownlink;
  throw ConfigError(path, "expected \"up\" or \"down\"");
}

CefMode read_cef_mode(const std::string& s, const std::string& path) {
  if (s == "path") return CefMode::kPathOnly;
  if (s == "total") return CefMode::kTotal;
  throw ConfigError(path, "expected \"path\" or \"total\"");
}

LinkConfig read_link(const json& j) {
  ObjectReader r(j, "$");
  r.find("kind");
  LinkConfig c;
  c.profile = r.has("profile") ? profile_from(r.require("profile"), "$.profile")
                               : profile_from(json("28ghz"), "$.profile");
  c.distance_m = r.number_or("distance_m", c.distance_m);
  check(c.distance_m >= 1.0, "$.distance_m", "must be >= 1 (close-in reference distance)");
  c.los = r.boolean_or("los", c.los);
  if (r.has("direction")) c.direction = read_direction(r.string("direction"), "$.direction");
  if (r.has("cef_mode")) c.cef_mode = read_cef_mode(r.string("cef_mode"), "$.cef_mode");
  r.finish();
  return c;
}

json link_json(const LinkConfig& c) {
  return json{{"kind", "link"},
              {"profile", profile_json(c.profile)},
              {"distance_m", c.distance_m},
              {"los", c.los},
              {"direction", to_string(c.direction)},
              {"cef_mode", to_string(c.cef_mode)}};
}

std::vector<Direction> read_directions(const std::string& s, const std::string& path) {
  if (s == "both") return {Direction::kUplink, Direction::kDownlink};
  return {read_direction(s, path)};
}

std::string directions_string(const std::vector<Direction>& d) {
  if (d.size() == 2 && d[0] == Direction::kUplink && d[1] == Direction::kDownlink) return "both";
  if (d.size() == 1) return to_string(d[0]);
  throw InvalidInput("directions must be up, down, or both (up then down)");
}

SweepParameter read_sweep_parameter(const std::string& s, const std::string& path) {
  if (s == "ps_loss_db") return SweepParameter::kPsLossDb;
  if (s == "ue_count") return SweepParameter::kUeCount;
  if (s == "bs_count") return SweepParameter::kBsCount;
  throw ConfigError(path, "expected ps_loss_db, ue_count or bs_count");
}

ScenarioConfig read_scenario(const json& j) {
  ObjectReader r(j, "$");
  r.find("kind");
  ScenarioConfig c;

  if (const json* bands = r.find("bands")) {
    check(bands->is_array() && !bands->empty(), "$.bands", "expected nonempty array");
    for (std::size_t i = 0; i < bands->size(); ++i) {
      c.bands.push_back(profile_from((*bands)[i], "$.bands[" + std::to_string(i) + "]"));
    }
  } else {
    for (const auto& name : preset_names()) c.bands.push_back(radio_preset(name));
  }

  c.cell_radius_m = r.number_or("cell_radius_m", c.cell_radius_m);
  check(c.cell_radius_m > 0.0, "$.cell_radius_m", "must be > 0");
  c.min_distance_m = r.number_or("min_distance_m", c.min_distance_m);
  check(c.min_distance_m >= 1.0, "$.min_distance_m", "must be >= 1");
  c.ue_count = r.count_or("ue_count", c.ue_count);
  c.bs_count = r.count_or("bs_count", c.bs_count);

  if (const json* seed = r.find("seed")) {
    check(seed->is_number_unsigned() ||
              (seed->is_number_integer() && seed->get<long long>() >= 0),
          "$.seed", "expected unsigned 64-bit integer");
    c.seed = seed->get<std::uint64_t>();
  }
  if (r.has("direction")) c.directions = read_directions(r.string("direction"), "$.direction");
  if (r.has("cef_mode")) c.cef_mode = read_cef_mode(r.string("cef_mode"), "$.cef_mode");

  if (const json* los = r.find("los_policy")) {
    if (los->is_string()) {
      check(los->get<std::string>() == "all_los", "$.los_policy",
            "expected \"all_los\" or {\"nlos_beyond_m\": x}");
    } else {
      ObjectReader lr(*los, "$.los_policy");
      const double t = lr.number("nlos_beyond_m");
      check(t >= 0.0, "$.los_policy.nlos_beyond_m", "must be >= 0");
      c.los_policy.nlos_beyond_m = t;
      lr.finish();
    }
  }

  ObjectReader sr(r.require("sweep"), "$.sweep");
  c.sweep.parameter = read_sweep_parameter(sr.string("parameter"), "$.sweep.parameter");
  const json& values = sr.require("values");
  check(values.is_array(), "$.sweep.values", "expected array");
  for (std::size_t i = 0; i < values.size(); ++i) {
    c.sweep.values.push_back(
        ObjectReader::as_number(values[i], "$.sweep.values[" + std::to_string(i) + "]"));
  }
  sr.finish();
  r.finish();

  at_path("$.sweep", [&] { validate(c); return 0; });
  return c;
}

json scenario_json(const ScenarioConfig& c) {
  json bands = json::array();
  for (const auto& b : c.bands) bands.push_back(profile_json(b));
  json los = c.los_policy.nlos_beyond_m
                 ? json{{"nlos_beyond_m", *c.los_policy.nlos_beyond_m}}
                 : json("all_los");
  return json{{"kind", "scenario"},
              {"bands", bands},
              {"cell_radius_m", c.cell_radius_m},
              {"min_distance_m", c.min_distance_m},
              {"ue_count", c.ue_count},
              {"bs_count", c.bs_count},
              {"seed", c.seed},
              {"direction", directions_string(c.directions)},
              {"cef_mode", to_string(c.cef_mode)},
              {"los_policy", los},
              {"sweep", {{"parameter", to_string(c.sweep.parameter)}, {"values", c.sweep.values}}}};
}

// -------------------------------------------------------------- dispatch

std::string infer_kind(const json& j) {
  if (!j.is_object()) throw ConfigError("$", "expected object, got " + type_name(j));
  if (j.contains("kind")) {
    const json& k = j["kind"];
    if (!k.is_string()) throw ConfigError("$.kind", "expected string");
    const auto kind = k.get<std::string>();
    if (kind == "cascade" || kind == "datacenter" || kind == "link" || kind == "scenario") {
      return kind;
    }
    throw ConfigError("$.kind", "unknown document kind '" + kind + "'");
  }
  if (j.contains("stages")) return "cascade";
  if (j.contains("p_info") || j.contains("a") || j.contains("b")) return "datacenter";
  if (j.contains("sweep")) return "scenario";
  if (j.contains("profile") || j.contains("distance_m")) return "link";
  throw ConfigError("$", "cannot determine document kind; set \"kind\"");
}

ConfigDocument read_document(const json& j) {
  if (j.is_object() && j.contains("tool_version") && j.contains("config")) {
    return read_document(j["config"]);
  }
  const std::string kind = infer_kind(j);
  if (kind == "cascade") return read_cascade(j);
  if (kind == "datacenter") return read_datacenter(j);
  if (kind == "link") return read_link(j);
  return read_scenario(j);
}

template <class T>
T expect_kind(ConfigDocument doc, const char* kind) {
  if (auto* v = std::get_if<T>(&doc)) return std::move(*v);
  throw ConfigError("$", std::string("expected a ") + kind + " document");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

ConfigDocument parse_config(std::string_view document) {
  return read_document(parse_json(document));
}

CascadeSpec parse_cascade(std::string_view d) {
  return expect_kind<CascadeSpec>(parse_config(d), "cascade");
}
DataCenterInput parse_datacenter(std::string_view d) {
  return expect_kind<DataCenterInput>(parse_config(d), "datacenter");
}
LinkConfig parse_link(std::string_view d) {
  return expect_kind<LinkConfig>(parse_config(d), "link");
}
ScenarioConfig parse_scenario(std::string_view d) {
  return expect_kind<ScenarioConfig>(parse_config(d), "scenario");
}
RadioProfile parse_radio_profile(std::string_view d) {
  return profile_from(parse_json(d), "$");
}

std::string echo(const CascadeSpec& c) { return dump(cascade_json(c)); }
std::string echo(const DataCenterInput& in) { return dump(datacenter_json(in)); }
std::string echo(const LinkConfig& c) { return dump(link_json(c)); }
std::string echo(const ScenarioConfig& c) { return dump(scenario_json(c)); }
std::string echo(const RadioProfile& p) { return dump(profile_json(p)); }
std::string echo(const ConfigDocument& d) {
  return std::visit([](const auto& v) { return echo(v); }, d);
}

std::vector<std::string> preset_names() { return {"28ghz", "142ghz"}; }

std::string_view preset_document(std::string_view name) {
  auto doc = find_preset(name);
  if (doc.empty()) throw InvalidInput("unknown band preset '" + std::string(name) + "'");
  return doc;
}

RadioProfile radio_preset(std::string_view name) {
  return read_profile(json::parse(preset_document(name)), "$");
}

ScenarioConfig default_scenario(SweepParameter parameter) {
  ScenarioConfig c;
  for (const auto& name : preset_names()) c.bands.push_back(radio_preset(name));
  c.ue_count = 100;
  c.bs_count = 1;
  c.sweep.parameter = parameter;
  switch (parameter) {
    case SweepParameter::kPsLossDb:
      for (int db = 0; db <= 14; db += 2) c.sweep.values.push_back(db);
      break;
    case SweepParameter::kUeCount:
      for (int n = 10; n <= 100; n += 10) c.sweep.values.push_back(n);
      break;
    case SweepParameter::kBsCount:
      for (int n = 1; n <= 7; ++n) c.sweep.values.push_back(n);
      break;
  }
  return c;
}

}  // namespace wastefactor::io
