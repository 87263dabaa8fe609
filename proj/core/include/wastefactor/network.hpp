#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wastefactor/radio_link.hpp"

namespace wastefactor {

enum class SweepParameter { kPsLossDb, kUeCount, kBsCount };

const char* to_string(SweepParameter p) noexcept;

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kPsLossDb;
  std::vector<double> values;

  bool operator==(const SweepSpec&) const = default;
};

// Links longer than nlos_beyond_m use the NLOS exponent. Unset: every link LOS.
struct LosPolicy {
  std::optional<double> nlos_beyond_m;

  bool is_los(double distance_m) const noexcept {
    return !nlos_beyond_m || distance_m <= *nlos_beyond_m;
  }

  bool operator==(const LosPolicy&) const = default;
};

struct ScenarioConfig {
  std::vector<RadioProfile> bands;
  double cell_radius_m = 100.0;  // radius of the whole deployment disk
  double min_distance_m = 10.0;  // BS-UE distances are floored here
  int ue_count = 10;
  int bs_count = 1;
  std::uint64_t seed = 1;
  std::vector<Direction> directions{Direction::kUplink, Direction::kDownlink};
  CefMode cef_mode = CefMode::kTotal;
  LosPolicy los_policy;
  SweepSpec sweep;

  bool operator==(const ScenarioConfig&) const = default;
};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2&) const = default;
};

struct Placements {
  std::vector<Point2> bs;
  std::vector<Point2> ue;

  bool operator==(const Placements&) const = default;
};

struct NetworkAggregate {
  double aggregate_rate_bps = 0.0;
  double aggregate_consumed_w = 0.0;
  double path_consumed_w = 0.0;
  double signal_out_w = 0.0;
  double w_total = 1.0;
  double network_cef_bpj = 0.0;
};

struct SweepRow {
  SweepParameter parameter = SweepParameter::kPsLossDb;
  double value = 0.0;
  double band_ghz = 0.0;
  Direction direction = Direction::kUplink;
  double aggregate_rate_bps = 0.0;
  double w_total = 1.0;
  double aggregate_consumed_w = 0.0;
  double network_cef_bpj = 0.0;

  bool operator==(const SweepRow&) const = default;
};

void validate(const ScenarioConfig& config);

// Independent sub-seed for sweep point `index`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

// BSs: the bs_count points of a hexagonal lattice nearest the origin, spaced
// so each BS covers 1/bs_count of the deployment disk. UEs: uniform over the
// disk, drawn from config.seed.
Placements place_entities(const ScenarioConfig& config);

// Nearest-BS association, equal time share per BS. In total mode each BS's
// fixed loads are counted once; UE loads once per UE.
NetworkAggregate evaluate_network(const ScenarioConfig& config, const RadioProfile& profile,
                                  Direction direction, const Placements& placements);

// Config with the swept parameter set to values[index] and the point's
// placement seed: derive_seed(seed, index) for UE/BS count sweeps,
// derive_seed(seed, 0) for component sweeps that do not move anything.
ScenarioConfig sweep_point(const ScenarioConfig& config, std::size_t index);

// One row per (value, band, direction) in that order. Points are independent
// and may run on `threads` workers; output does not depend on the count.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config, unsigned threads = 1);

}  // namespace wastefactor
