#pragma once

namespace wastefactor {

/// Decibels to a linear power ratio, 10^(x/10).
double db_to_linear(double db) noexcept;

/// Linear power ratio to decibels. Throws DomainError for ratio <= 0.
double linear_to_db(double ratio);

/// dBm to watts.
double dbm_to_watts(double dbm) noexcept;

/// Watts to dBm. Throws DomainError for watts <= 0.
double watts_to_dbm(double watts);

}  // namespace wastefactor
