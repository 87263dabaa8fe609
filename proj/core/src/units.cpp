#include "wastefactor/units.hpp"

#include <cmath>
#include <string>

#include "wastefactor/errors.hpp"

namespace wastefactor {

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio) {
  if (!(ratio > 0.0)) {
    throw DomainError("linear_to_db: ratio must be > 0, got " + std::to_string(ratio));
  }
  return 10.0 * std::log10(ratio);
}

double dbm_to_watts(double dbm) noexcept { return 1e-3 * db_to_linear(dbm); }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) {
    throw DomainError("watts_to_dbm: power must be > 0, got " + std::to_string(watts));
  }
  return linear_to_db(watts * 1e3);
}

}  // namespace wastefactor
