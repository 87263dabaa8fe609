#pragma once

#include <string>

#include "wastefactor/cascade.hpp"

namespace wastefactor {

// A load that draws power but carries no signal: oscillators, displays,
// LNA bias, cooling.
struct NonPathLoad {
  std::string name;
  double power_w = 0.0;

  static NonPathLoad make(std::string name, double power_w);
};

// Low-noise amplifier description. The LNA sits outside the on-path W chain:
// its DC draw does not track the signal level, so it is booked as a NonPathLoad.
struct LnaSpec {
  double gain = 100.0;
  double noise_factor = 2.0;
  double figure_of_merit_per_mw = 1.0;

  static LnaSpec make(double gain, double noise_factor, double figure_of_merit_per_mw);
};

// Passive attenuator with the given insertion loss (dB >= 0).
StageSpec passive_stage(double insertion_loss_db, std::string name = "passive");

// Power amplifier. W = 1/efficiency: the PA draws P_out/efficiency to deliver P_out.
StageSpec pa_stage(double efficiency, double gain, double noise_factor = 1.0,
                   std::string name = "pa");

// Antenna radiation efficiency treated as dissipative loss. Directive gain is
// not part of the cascade; it belongs to the channel term of the link budget.
StageSpec antenna_stage(double efficiency, std::string name = "antenna");

// LNA noise stage for receiver noise-figure chains (not for W chains).
StageSpec lna_noise_stage(const LnaSpec& lna, std::string name = "lna");

// DC power of an LNA, from FoM = G / (P_DC[mW] * (F - 1)). Returns watts.
// Throws DomainError when noise_factor <= 1 (FoM undefined).
double lna_dc_power(const LnaSpec& lna);

}  // namespace wastefactor
