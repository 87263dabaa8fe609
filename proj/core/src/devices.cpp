#include "wastefactor/devices.hpp"

#include <cmath>
#include <utility>

#include "wastefactor/errors.hpp"
#include "wastefactor/units.hpp"

namespace wastefactor {

NonPathLoad NonPathLoad::make(std::string name, double power_w) {
  if (!(power_w >= 0.0) || !std::isfinite(power_w)) {
    throw InvalidInput("non-path load '" + name + "': power must be finite and >= 0");
  }
  return {std::move(name), power_w};
}

LnaSpec LnaSpec::make(double gain, double noise_factor, double figure_of_merit_per_mw) {
  if (!(gain > 1.0)) throw InvalidInput("LNA gain must be > 1 (linear)");
  if (!(noise_factor >= 1.0)) throw InvalidInput("LNA noise factor must be >= 1");
  if (!(figure_of_merit_per_mw > 0.0)) throw InvalidInput("LNA figure of merit must be > 0");
  return {gain, noise_factor, figure_of_merit_per_mw};
}

StageSpec passive_stage(double insertion_loss_db, std::string name) {
  if (!(insertion_loss_db >= 0.0) || !std::isfinite(insertion_loss_db)) {
    throw InvalidInput("insertion loss must be finite and >= 0 dB");
  }
  return StageSpec::passive(std::move(name), db_to_linear(-insertion_loss_db));
}

StageSpec pa_stage(double efficiency, double gain, double noise_factor, std::string name) {
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw InvalidInput("PA efficiency must lie in (0, 1]");
  }
  return StageSpec::make(std::move(name), gain, 1.0 / efficiency, noise_factor);
}

StageSpec antenna_stage(double efficiency, std::string name) {
  if (!(efficiency > 0.0 && efficiency <= 1.0)) {
    throw InvalidInput("antenna efficiency must lie in (0, 1]");
  }
  return StageSpec::passive(std::move(name), efficiency);
}

StageSpec lna_noise_stage(const LnaSpec& lna, std::string name) {
  // W is irrelevant for a noise chain; the stage is active, so W = 1.
  return StageSpec::make(std::move(name), lna.gain, 1.0, lna.noise_factor);
}

double lna_dc_power(const LnaSpec& lna) {
  if (!(lna.noise_factor > 1.0)) {
    throw DomainError("LNA figure of merit is undefined for noise factor <= 1");
  }
  if (!(lna.figure_of_merit_per_mw > 0.0)) {
    throw DomainError("LNA figure of merit must be > 0");
  }
  const double p_dc_mw = lna.gain / (lna.figure_of_merit_per_mw * (lna.noise_factor - 1.0));
  return p_dc_mw * 1e-3;
}

}  // namespace wastefactor
