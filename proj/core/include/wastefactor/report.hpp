#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "wastefactor/cascade.hpp"
#include "wastefactor/config.hpp"
#include "wastefactor/datacenter.hpp"
#include "wastefactor/network.hpp"
#include "wastefactor/radio_link.hpp"

namespace wastefactor::io {

inline constexpr std::string_view kToolVersion = "1.0.0";

inline constexpr std::string_view kSweepCsvHeader =
    "param,value,band_ghz,direction,rate_bps,w_total,p_consumed_w,cef_bpj";

// 9 significant digits, scientific, locale independent ("1.00000000e+09").
std::string format_number(double value);

// RFC 4180 field quoting.
std::string csv_field(std::string_view field);

// LF line endings, rows in the given order.
std::string emit_csv(std::span<const SweepRow> rows);
std::string emit_json(std::span<const SweepRow> rows);

std::string emit_csv(const CascadeSpec& spec, const CascadeReport& report);
std::string emit_json(const CascadeSpec& spec, const CascadeReport& report);

std::string emit_csv(const DataCenterInput& input);
std::string emit_json(const DataCenterInput& input);

std::string emit_csv(const LinkReport& report);
std::string emit_json(const LinkReport& report);

// 64-bit FNV-1a, lowercase hex.
std::string checksum(std::string_view bytes);

struct RunManifest {
  std::string tool_version{kToolVersion};
  std::string config_echo;  // canonical JSON of the resolved config
  std::uint64_t seed = 0;
  std::string output_format;
  std::string output_checksum;
};

std::string emit_manifest(const RunManifest& manifest);

// Returns nullopt when the document is not a run manifest.
std::optional<RunManifest> parse_manifest(std::string_view document);

}  // namespace wastefactor::io
