#pragma once

#include <string>
#include <vector>

#include "wastefactor/cascade.hpp"
#include "wastefactor/devices.hpp"

namespace wastefactor {

// Per-band transceiver parameters. Field suffixes carry units; bare fields are
// fractions or dimensionless. See presets.hpp for the built-in bands.
struct RadioProfile {
  std::string name;
  double carrier_frequency_ghz = 28.0;
  double bandwidth_hz = 400e6;
  double bs_aperture_m2 = 0.5;
  double ue_aperture_m2 = 0.0005;
  double bs_antenna_gain_dbi = 0.0;
  double ue_antenna_gain_dbi = 0.0;
  double ple_los = 2.0;
  double ple_nlos = 3.2;
  int bs_elements = 1;
  int ue_elements = 1;
  double lna_fom_per_mw = 1.0;
  double lna_gain_db = 20.0;
  double lna_noise_figure_db = 3.0;
  double mixer_loss_db = 0.0;
  double ps_loss_db = 0.0;
  double lo_power_dbm = 0.0;
  double pa_efficiency = 1.0;
  double pa_gain_db = 20.0;
  double antenna_efficiency = 1.0;
  double cooling_overhead = 0.0;
  double ue_screen_power_w = 0.0;
  double bs_pa_output_dbm = 30.0;
  double ue_pa_output_dbm = 23.0;

  LnaSpec lna() const;

  bool operator==(const RadioProfile&) const = default;
};

enum class Direction { kUplink, kDownlink };
enum class CefMode { kPathOnly, kTotal };

const char* to_string(Direction d) noexcept;
const char* to_string(CefMode m) noexcept;

struct LinkReport {
  double path_loss_db = 0.0;
  double g_channel = 0.0;  // path loss and both directive gains, capped at 1
  double rx_signal_power_w = 0.0;  // at the RX antenna port
  double noise_power_w = 0.0;
  double noise_figure_db = 0.0;
  double snr = 0.0;
  double rate_bps = 0.0;
  double w_tx = 1.0;
  double w_rx = 1.0;
  double g_rx = 1.0;
  double w_link = 1.0;
  double p_signal_out_w = 0.0;  // at the RX chain output
  double p_path_w = 0.0;        // w_link * p_signal_out_w
  double bs_fixed_w = 0.0;      // BS loads that do not scale with links (LO, LNA)
  double ue_fixed_w = 0.0;      // UE loads (LO, LNA, screen)
  double bs_path_w = 0.0;       // part of p_path_w drawn at the BS
  double p_non_path_w = 0.0;    // fixed loads plus BS cooling
  double p_consumed_total_w = 0.0;
  double cef_bpj = 0.0;
  std::vector<NonPathLoad> non_path_loads;
};

void validate(const RadioProfile& profile);

// Close-in free-space reference model anchored at 1 m.
double path_loss_db(const RadioProfile& profile, double distance_m, bool los);

// On-path W chains. TX: PA, phase shifter, antenna. RX: antenna, phase shifter,
// mixer. The LNA is excluded; it is booked as non-path power.
CascadeSpec tx_chain(const RadioProfile& profile);
CascadeSpec rx_chain(const RadioProfile& profile);

// Receiver noise chain: antenna loss, LNA, phase shifter, mixer.
CascadeSpec rx_noise_chain(const RadioProfile& profile);
double link_noise_figure_db(const RadioProfile& profile);

double shannon_rate(double bandwidth_hz, double snr);

// Bits per joule. p_non_path_w = 0 gives the path-only form.
double consumption_efficiency_factor(double rate_bps, double waste_factor,
                                     double p_signal_out_w, double p_non_path_w = 0.0);

double thermal_noise_dbm(double bandwidth_hz);

LinkReport evaluate_link(const RadioProfile& profile, double distance_m, bool los,
                         Direction direction, CefMode cef_mode);

}  // namespace wastefactor
