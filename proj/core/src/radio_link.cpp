#include "wastefactor/radio_link.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wastefactor/errors.hpp"
#include "wastefactor/units.hpp"

namespace wastefactor {
namespace {

constexpr double kThermalNoiseDbmPerHz = -174.0;  // 290 K
constexpr double kFreeSpaceAt1mGhz = 32.4;        // 20 log10(4 pi 1e9 / c)

void require(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

LnaSpec RadioProfile::lna() const {
  return LnaSpec::make(db_to_linear(lna_gain_db), db_to_linear(lna_noise_figure_db),
                       lna_fom_per_mw);
}

const char* to_string(Direction d) noexcept {
  return d == Direction::kUplink ? "up" : "down";
}

const char* to_string(CefMode m) noexcept {
  return m == CefMode::kPathOnly ? "path" : "total";
}

void validate(const RadioProfile& p) {
  require(std::isfinite(p.carrier_frequency_ghz) && p.carrier_frequency_ghz > 0.0,
          "carrier_frequency_ghz must be > 0");
  require(std::isfinite(p.bandwidth_hz) && p.bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
  require(finite_nonneg(p.bs_aperture_m2) && finite_nonneg(p.ue_aperture_m2),
          "aperture areas must be >= 0");
  require(std::isfinite(p.bs_antenna_gain_dbi) && std::isfinite(p.ue_antenna_gain_dbi),
          "antenna gains must be finite");
  require(std::isfinite(p.ple_los) && p.ple_los > 0.0, "ple_los must be > 0");
  require(std::isfinite(p.ple_nlos) && p.ple_nlos > 0.0, "ple_nlos must be > 0");
  require(p.bs_elements >= 1 && p.ue_elements >= 1, "element counts must be >= 1");
  require(p.lna_fom_per_mw > 0.0, "lna_fom_per_mw must be > 0");
  require(std::isfinite(p.lna_gain_db) && p.lna_gain_db > 0.0, "lna_gain_db must be > 0");
  require(finite_nonneg(p.lna_noise_figure_db), "lna_noise_figure_db must be >= 0");
  require(finite_nonneg(p.mixer_loss_db), "mixer_loss_db must be >= 0");
  require(finite_nonneg(p.ps_loss_db), "ps_loss_db must be >= 0");
  require(std::isfinite(p.lo_power_dbm), "lo_power_dbm must be finite");
  require(p.pa_efficiency > 0.0 && p.pa_efficiency <= 1.0, "pa_efficiency must lie in (0, 1]");
  require(std::isfinite(p.pa_gain_db), "pa_gain_db must be finite");
  require(db_to_linear(p.pa_gain_db) >= p.pa_efficiency,
          "pa_gain_db too low: the PA would draw less than its input drive");
  require(p.antenna_efficiency > 0.0 && p.antenna_efficiency <= 1.0,
          "antenna_efficiency must lie in (0, 1]");
  require(finite_nonneg(p.cooling_overhead), "cooling_overhead must be >= 0");
  require(finite_nonneg(p.ue_screen_power_w), "ue_screen_power_w must be >= 0");
  require(std::isfinite(p.bs_pa_output_dbm) && std::isfinite(p.ue_pa_output_dbm),
          "PA output powers must be finite");
}

double path_loss_db(const RadioProfile& p, double distance_m, bool los) {
  if (!(distance_m >= 1.0)) {
    throw InvalidInput("distance must be >= 1 m (close-in reference distance)");
  }
  const double ple = los ? p.ple_los : p.ple_nlos;
  return kFreeSpaceAt1mGhz + 20.0 * std::log10(p.carrier_frequency_ghz) +
         10.0 * ple * std::log10(distance_m);
}

CascadeSpec tx_chain(const RadioProfile& p) {
  CascadeSpec c;
  c.stages = {pa_stage(p.pa_efficiency, db_to_linear(p.pa_gain_db), 1.0, "pa"),
              passive_stage(p.ps_loss_db, "phase_shifter"),
              antenna_stage(p.antenna_efficiency, "antenna")};
  return c;
}

CascadeSpec rx_chain(const RadioProfile& p) {
  CascadeSpec c;
  c.stages = {antenna_stage(p.antenna_efficiency, "antenna"),
              passive_stage(p.ps_loss_db, "phase_shifter"),
              passive_stage(p.mixer_loss_db, "mixer")};
  return c;
}

CascadeSpec rx_noise_chain(const RadioProfile& p) {
  CascadeSpec c;
  c.stages = {antenna_stage(p.antenna_efficiency, "antenna"), lna_noise_stage(p.lna(), "lna"),
              passive_stage(p.ps_loss_db, "phase_shifter"),
              passive_stage(p.mixer_loss_db, "mixer")};
  return c;
}

double link_noise_figure_db(const RadioProfile& p) {
  return linear_to_db(cascade_noise_factor(rx_noise_chain(p)));
}

double shannon_rate(double bandwidth_hz, double snr) {
  if (!(snr >= 0.0)) throw DomainError("snr must be >= 0");
  return bandwidth_hz * std::log2(1.0 + snr);
}

double consumption_efficiency_factor(double rate_bps, double waste_factor, double p_signal_out_w,
                                     double p_non_path_w) {
  if (is_fully_lossy(waste_factor)) return 0.0;
  const double consumed = waste_factor * p_signal_out_w + p_non_path_w;
  if (!(consumed > 0.0)) throw DomainError("consumed power must be > 0 to form a CEF");
  return rate_bps / consumed;
}

double thermal_noise_dbm(double bandwidth_hz) {
  return kThermalNoiseDbmPerHz + 10.0 * std::log10(bandwidth_hz);
}

LinkReport evaluate_link(const RadioProfile& p, double distance_m, bool los, Direction direction,
                         CefMode cef_mode) {
  validate(p);
  const bool downlink = direction == Direction::kDownlink;

  LinkReport r;
  r.path_loss_db = path_loss_db(p, distance_m, los);

  const CascadeSpec tx = tx_chain(p);
  const CascadeSpec rx = rx_chain(p);
  r.w_tx = cascade_waste_factor(tx);
  r.w_rx = cascade_waste_factor(rx);
  r.g_rx = cascade_total_gain(rx.stages);

  // Directive gains redirect power; they live in the channel term. Received
  // power can never exceed radiated power.
  const double channel_db =
      p.bs_antenna_gain_dbi + p.ue_antenna_gain_dbi - r.path_loss_db;
  r.g_channel = std::min(1.0, db_to_linear(channel_db));

  const double pa_out_w = dbm_to_watts(downlink ? p.bs_pa_output_dbm : p.ue_pa_output_dbm);
  const double radiated_w =
      pa_out_w * cascade_total_gain(std::span(tx.stages).subspan(1));
  r.rx_signal_power_w = radiated_w * r.g_channel;

  r.noise_figure_db = link_noise_figure_db(p);
  r.noise_power_w = dbm_to_watts(thermal_noise_dbm(p.bandwidth_hz) + r.noise_figure_db);
  r.snr = r.rx_signal_power_w / r.noise_power_w;
  r.rate_bps = shannon_rate(p.bandwidth_hz, r.snr);

  r.p_signal_out_w = r.rx_signal_power_w * r.g_rx;
  r.w_link = generalized_link_w({r.w_tx, r.g_channel, r.g_rx, r.w_rx});
  if (is_fully_lossy(r.w_link)) {
    // Nothing arrives; the TX still burns its PA draw.
    r.p_path_w = pa_out_w / p.pa_efficiency;
  } else {
    r.p_path_w = r.w_link * r.p_signal_out_w;
  }

  const double lo_w = dbm_to_watts(p.lo_power_dbm);
  const double lna_w = lna_dc_power(p.lna());
  r.bs_fixed_w = lo_w + (downlink ? 0.0 : lna_w);
  r.ue_fixed_w = lo_w + p.ue_screen_power_w + (downlink ? lna_w : 0.0);
  r.bs_path_w = downlink ? r.p_path_w : 0.0;
  const double cooling_w = p.cooling_overhead * (r.bs_fixed_w + r.bs_path_w);

  r.non_path_loads = {NonPathLoad::make("bs_lo", lo_w), NonPathLoad::make("ue_lo", lo_w),
                      NonPathLoad::make(downlink ? "ue_lna" : "bs_lna", lna_w),
                      NonPathLoad::make("ue_screen", p.ue_screen_power_w),
                      NonPathLoad::make("bs_cooling", cooling_w)};
  r.p_non_path_w = r.bs_fixed_w + r.ue_fixed_w + cooling_w;
  r.p_consumed_total_w = r.p_path_w + r.p_non_path_w;

  if (is_fully_lossy(r.w_link)) {
    r.cef_bpj = 0.0;
  } else {
    r.cef_bpj = consumption_efficiency_factor(
        r.rate_bps, r.w_link, r.p_signal_out_w,
        cef_mode == CefMode::kTotal ? r.p_non_path_w : 0.0);
  }
  return r;
}

}  // namespace wastefactor
