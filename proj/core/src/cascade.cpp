#include "wastefactor/cascade.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "wastefactor/errors.hpp"

namespace wastefactor {
namespace {

// Rounding slack for the per-stage consumption check. A passive stage built
// as W = 1/G lands within a few ulp of zero.
constexpr double kConsumedSlack = 1e-12;

void check_stage(const StageSpec& s) {
  if (!(s.gain > 0.0) || !std::isfinite(s.gain)) {
    throw InvalidInput("stage '" + s.name + "': gain must be finite and > 0");
  }
  if (!(s.waste_factor >= 1.0) || !std::isfinite(s.waste_factor)) {
    throw InvalidInput("stage '" + s.name + "': waste_factor must be finite and >= 1");
  }
  if (!(s.noise_factor >= 1.0) || !std::isfinite(s.noise_factor)) {
    throw InvalidInput("stage '" + s.name + "': noise_factor must be finite and >= 1");
  }
}

void check_stages(std::span<const StageSpec> stages) {
  if (stages.empty()) throw InvalidInput("empty cascade");
  for (const auto& s : stages) check_stage(s);
}

}  // namespace

StageSpec StageSpec::make(std::string name, double gain, double waste_factor,
                          double noise_factor) {
  StageSpec s{std::move(name), gain, waste_factor, noise_factor};
  check_stage(s);
  return s;
}

StageSpec StageSpec::passive(std::string name, double gain) {
  if (gain > 1.0) {
    throw InvalidInput("passive stage '" + name + "': gain must be <= 1");
  }
  if (!(gain > 0.0)) {
    throw InvalidInput("passive stage '" + name + "': gain must be > 0");
  }
  return make(std::move(name), gain, 1.0 / gain, 1.0 / gain);
}

double cascade_noise_factor(std::span<const StageSpec> stages) {
  check_stages(stages);
  double f = stages.front().noise_factor;
  double upstream_gain = 1.0;
  for (std::size_t i = 1; i < stages.size(); ++i) {
    upstream_gain *= stages[i - 1].gain;
    f += (stages[i].noise_factor - 1.0) / upstream_gain;
  }
  return f;
}

double cascade_noise_factor(const CascadeSpec& cascade) {
  return cascade_noise_factor(cascade.stages);
}

double cascade_waste_factor(std::span<const StageSpec> stages) {
  check_stages(stages);
  const std::size_t n = stages.size();
  double w = stages[n - 1].waste_factor;
  double downstream_gain = 1.0;
  for (std::size_t k = n - 1; k-- > 0;) {
    downstream_gain *= stages[k + 1].gain;
    w += (stages[k].waste_factor - 1.0) / downstream_gain;
  }
  return w;
}

double cascade_waste_factor(const CascadeSpec& cascade) {
  return cascade_waste_factor(cascade.stages);
}

double cascade_total_gain(std::span<const StageSpec> stages) {
  double g = 1.0;
  for (const auto& s : stages) g *= s.gain;
  return g;
}

CascadeReport cascade_power_trace(const CascadeSpec& cascade) {
  check_stages(cascade.stages);
  if (!(cascade.source_power_w > 0.0) || !std::isfinite(cascade.source_power_w)) {
    throw InvalidInput("source_power_w must be finite and > 0");
  }

  CascadeReport r;
  r.source_power_w = cascade.source_power_w;
  r.per_stage_signal_w.reserve(cascade.stages.size());
  r.per_stage_consumed_w.reserve(cascade.stages.size());

  double p_in = cascade.source_power_w;
  double consumed_sum = 0.0;
  for (const auto& s : cascade.stages) {
    const double p_out = s.gain * p_in;
    double consumed = s.waste_factor * p_out - p_in;
    if (consumed < 0.0) {
      if (consumed < -kConsumedSlack * p_in) {
        throw InvalidStage("stage '" + s.name +
                           "': waste_factor below 1/gain implies negative consumption");
      }
      consumed = 0.0;
    }
    r.per_stage_signal_w.push_back(p_out);
    r.per_stage_consumed_w.push_back(consumed);
    consumed_sum += consumed;
    p_in = p_out;
  }

  r.signal_out_w = p_in;
  r.consumed_path_total_w = consumed_sum + cascade.source_power_w;
  r.waste_factor = r.consumed_path_total_w / r.signal_out_w;
  r.noise_factor = cascade_noise_factor(cascade.stages);
  r.total_gain = cascade_total_gain(cascade.stages);
  return r;
}

void validate(const GeneralizedLink& link) {
  if (!(link.w_source >= 1.0)) throw InvalidInput("w_source must be >= 1");
  if (!(link.w_sink >= 1.0)) throw InvalidInput("w_sink must be >= 1");
  if (!(link.g_channel >= 0.0 && link.g_channel <= 1.0)) {
    throw InvalidInput("g_channel must lie in [0, 1]");
  }
  if (!(link.g_rx > 0.0)) throw InvalidInput("g_rx must be > 0");
}

double generalized_link_w(const GeneralizedLink& link) {
  validate(link);
  if (link.g_channel == 0.0) return std::numeric_limits<double>::infinity();
  return link.w_sink + (1.0 / link.g_rx) * (1.0 / link.g_channel - 1.0) +
         (link.w_source - 1.0) / (link.g_rx * link.g_channel);
}

bool is_fully_lossy(double waste_factor) noexcept { return std::isinf(waste_factor); }

}  // namespace wastefactor
