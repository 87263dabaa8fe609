#pragma once

namespace wastefactor {

// Power inventory of a data center. Any single consistent unit works: every
// derived quantity is a ratio.
struct DataCenterProfile {
  double p_info = 0.0;      // carries or stores information
  double p_non_info = 0.0;  // on site but not in the data path
  double p_aux = 0.0;       // cooling, PDUs, other facility overhead

  bool operator==(const DataCenterProfile&) const = default;
};

struct DataCenterReport {
  double eta = 1.0;    // p_info / (p_info + p_non_info)
  double pue = 1.0;    // total / (p_info + p_non_info)
  double w_bar = 1.0;  // 1 / eta
};

enum class Verdict { kFirst, kSecond, kTie };

struct DataCenterComparison {
  DataCenterReport first;
  DataCenterReport second;
  Verdict verdict = Verdict::kTie;
};

void validate(const DataCenterProfile& profile);

DataCenterReport evaluate_datacenter(const DataCenterProfile& profile);

// W-bar expressed through the auxiliary load: p_aux / (p_info (PUE - 1)).
// Only defined for p_aux > 0; throws DomainError otherwise.
double w_bar_from_aux(const DataCenterProfile& profile);

// Lower W-bar wins. W-bar values within 1e-12 relative are a tie.
DataCenterComparison compare_datacenters(const DataCenterProfile& a, const DataCenterProfile& b);

// Link between two data centers, each reduced to its W-bar.
double inter_datacenter_w(double w_source, double g_channel, double g_rx, double w_sink);

const char* to_string(Verdict v) noexcept;

}  // namespace wastefactor
