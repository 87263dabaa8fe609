#include "wastefactor/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "json.hpp"

namespace wastefactor::io {
namespace {

using nlohmann::json;

// JSON has no infinity; a fully lossy W is written as null.
json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void append_row(std::string& out, std::initializer_list<std::string> fields) {
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += csv_field(f);
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 8);
  return std::string(buf, res.ptr);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string emit_csv(std::span<const SweepRow> rows) {
  std::string out(kSweepCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    append_row(out, {to_string(r.parameter), format_number(r.value), format_number(r.band_ghz),
                     to_string(r.direction), format_number(r.aggregate_rate_bps),
                     format_number(r.w_total), format_number(r.aggregate_consumed_w),
                     format_number(r.network_cef_bpj)});
  }
  return out;
}

std::string emit_json(std::span<const SweepRow> rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"param", to_string(r.parameter)},
                   {"value", r.value},
                   {"band_ghz", r.band_ghz},
                   {"direction", to_string(r.direction)},
                   {"rate_bps", r.aggregate_rate_bps},
                   {"w_total", number_or_null(r.w_total)},
                   {"p_consumed_w", r.aggregate_consumed_w},
                   {"cef_bpj", r.network_cef_bpj}});
  }
  return dump(json{{"rows", arr}});
}

std::string emit_csv(const CascadeSpec& spec, const CascadeReport& report) {
  std::string out = "stage,name,gain,waste_factor,noise_factor,signal_out_w,consumed_w\n";
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    const auto& s = spec.stages[i];
    append_row(out, {std::to_string(i + 1), s.name, format_number(s.gain),
                     format_number(s.waste_factor), format_number(s.noise_factor),
                     format_number(report.per_stage_signal_w[i]),
                     format_number(report.per_stage_consumed_w[i])});
  }
  append_row(out, {"total", "cascade", format_number(report.total_gain),
                   format_number(report.waste_factor), format_number(report.noise_factor),
                   format_number(report.signal_out_w),
                   format_number(report.consumed_path_total_w)});
  return out;
}

std::string emit_json(const CascadeSpec& spec, const CascadeReport& report) {
  json stages = json::array();
  for (std::size_t i = 0; i < spec.stages.size(); ++i) {
    const auto& s = spec.stages[i];
    stages.push_back({{"name", s.name},
                      {"gain", s.gain},
                      {"waste_factor", s.waste_factor},
                      {"noise_factor", s.noise_factor},
                      {"signal_out_w", report.per_stage_signal_w[i]},
                      {"consumed_w", report.per_stage_consumed_w[i]}});
  }
  return dump(json{{"waste_factor", report.waste_factor},
                   {"waste_factor_db", 10.0 * std::log10(report.waste_factor)},
                   {"noise_factor", report.noise_factor},
                   {"noise_figure_db", 10.0 * std::log10(report.noise_factor)},
                   {"total_gain", report.total_gain},
                   {"source_power_w", report.source_power_w},
                   {"signal_out_w", report.signal_out_w},
                   {"consumed_path_total_w", report.consumed_path_total_w},
                   {"stages", stages}});
}

std::string emit_csv(const DataCenterInput& input) {
  std::string out = "profile,eta,pue,w_bar\n";
  const char* labels[] = {"a", "b"};
  for (std::size_t i = 0; i < input.profiles.size() && i < 2; ++i) {
    const auto r = evaluate_datacenter(input.profiles[i]);
    append_row(out, {labels[i], format_number(r.eta), format_number(r.pue),
                     format_number(r.w_bar)});
  }
  if (input.profiles.size() == 2) {
    const auto c = compare_datacenters(input.profiles[0], input.profiles[1]);
    const char* verdict = c.verdict == Verdict::kFirst    ? "a"
                          : c.verdict == Verdict::kSecond ? "b"
                                                          : "tie";
    append_row(out, {"verdict", verdict, "", ""});
  }
  return out;
}

std::string emit_json(const DataCenterInput& input) {
  auto report_json = [](const DataCenterReport& r) {
    return json{{"eta", r.eta}, {"pue", r.pue}, {"w_bar", r.w_bar}};
  };
  if (input.profiles.size() == 2) {
    const auto c = compare_datacenters(input.profiles[0], input.profiles[1]);
    const char* verdict = c.verdict == Verdict::kFirst    ? "a"
                          : c.verdict == Verdict::kSecond ? "b"
                                                          : "tie";
    return dump(json{{"a", report_json(c.first)},
                     {"b", report_json(c.second)},
                     {"lower_w_bar", verdict}});
  }
  return dump(report_json(evaluate_datacenter(input.profiles.at(0))));
}

std::string emit_csv(const LinkReport& r) {
  std::string out = "field,value\n";
  auto row = [&](const char* k, double v) { append_row(out, {k, format_number(v)}); };
  row("path_loss_db", r.path_loss_db);
  row("g_channel", r.g_channel);
  row("rx_signal_power_w", r.rx_signal_power_w);
  row("noise_power_w", r.noise_power_w);
  row("noise_figure_db", r.noise_figure_db);
  row("snr", r.snr);
  row("rate_bps", r.rate_bps);
  row("w_tx", r.w_tx);
  row("w_rx", r.w_rx);
  row("g_rx", r.g_rx);
  row("w_link", r.w_link);
  row("p_signal_out_w", r.p_signal_out_w);
  row("p_path_w", r.p_path_w);
  row("p_non_path_w", r.p_non_path_w);
  row("p_consumed_total_w", r.p_consumed_total_w);
  row("cef_bpj", r.cef_bpj);
  return out;
}

std::string emit_json(const LinkReport& r) {
  json loads = json::object();
  for (const auto& l : r.non_path_loads) loads[l.name] = l.power_w;
  return dump(json{{"path_loss_db", r.path_loss_db},
                   {"g_channel", r.g_channel},
                   {"rx_signal_power_w", r.rx_signal_power_w},
                   {"noise_power_w", r.noise_power_w},
                   {"noise_figure_db", r.noise_figure_db},
                   {"snr", r.snr},
                   {"rate_bps", r.rate_bps},
                   {"w_tx", r.w_tx},
                   {"w_rx", r.w_rx},
                   {"g_rx", r.g_rx},
                   {"w_link", number_or_null(r.w_link)},
                   {"fully_lossy", is_fully_lossy(r.w_link)},
                   {"p_signal_out_w", r.p_signal_out_w},
                   {"p_path_w", r.p_path_w},
                   {"p_non_path_w", r.p_non_path_w},
                   {"non_path_loads", loads},
                   {"p_consumed_total_w", r.p_consumed_total_w},
                   {"cef_bpj", r.cef_bpj}});
}

std::string checksum(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string emit_manifest(const RunManifest& m) {
  return dump(json{{"tool_version", m.tool_version},
                   {"config", json::parse(m.config_echo)},
                   {"seed", m.seed},
                   {"output_format", m.output_format},
                   {"output_checksum", m.output_checksum}});
}

std::optional<RunManifest> parse_manifest(std::string_view document) {
  const json j = json::parse(document.begin(), document.end(), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("tool_version") ||
      !j.contains("config")) {
    return std::nullopt;
  }
  RunManifest m;
  m.tool_version = j.value("tool_version", std::string{});
  m.config_echo = j["config"].dump(2) + "\n";
  m.seed = j.value("seed", std::uint64_t{0});
  m.output_format = j.value("output_format", std::string{});
  m.output_checksum = j.value("output_checksum", std::string{});
  return m;
}

}  // namespace wastefactor::io
