#pragma once

#include <span>
#include <string>
#include <vector>

namespace wastefactor {

// One stage of a cascade. All quantities are linear power ratios.
//
// Use StageSpec::make (or the constructors in devices.hpp) so that the
// invariants gain > 0, waste_factor >= 1, noise_factor >= 1 are enforced.
struct StageSpec {
  std::string name;
  double gain = 1.0;
  double waste_factor = 1.0;
  double noise_factor = 1.0;

  static StageSpec make(std::string name, double gain, double waste_factor,
                        double noise_factor);

  // Passive attenuator: W = F = 1/gain.
  static StageSpec passive(std::string name, double gain);

  bool operator==(const StageSpec&) const = default;
};

// Ordered stages, index 0 = source side, last = sink side.
struct CascadeSpec {
  std::vector<StageSpec> stages;
  double source_power_w = 1.0;

  bool operator==(const CascadeSpec&) const = default;
};

struct CascadeReport {
  double waste_factor = 1.0;
  double noise_factor = 1.0;
  double total_gain = 1.0;
  double source_power_w = 0.0;
  double signal_out_w = 0.0;
  double consumed_path_total_w = 0.0;
  std::vector<double> per_stage_signal_w;
  std::vector<double> per_stage_consumed_w;
};

// Wireless source -> channel -> sink link, each side already reduced to a
// single equivalent W and gain.
struct GeneralizedLink {
  double w_source = 1.0;
  double g_channel = 1.0;
  double g_rx = 1.0;
  double w_sink = 1.0;
};

// Input-referred cascade noise factor (Friis).
double cascade_noise_factor(std::span<const StageSpec> stages);
double cascade_noise_factor(const CascadeSpec& cascade);

// Output-referred cascade waste factor. Correction terms are divided by the
// gains of the stages *after* the wasteful one.
double cascade_waste_factor(std::span<const StageSpec> stages);
double cascade_waste_factor(const CascadeSpec& cascade);

double cascade_total_gain(std::span<const StageSpec> stages);

// Explicit power bookkeeping. Each stage i sees P_{i-1} at its input, emits
// P_i = G_i P_{i-1} and draws W_i P_i - P_{i-1} on its own. The cascade W is the
// total drawn (plus the source drive) over the delivered signal.
//
// Throws InvalidStage when a stage would have to draw negative power,
// i.e. W_i < 1/G_i.
CascadeReport cascade_power_trace(const CascadeSpec& cascade);

// W of source -> channel -> sink. Returns +infinity when g_channel == 0: no
// power reaches the sink, every watt is wasted.
double generalized_link_w(const GeneralizedLink& link);

// Validate a link and throw InvalidInput on violation.
void validate(const GeneralizedLink& link);

bool is_fully_lossy(double waste_factor) noexcept;

}  // namespace wastefactor
