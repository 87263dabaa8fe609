#include "wastefactor/datacenter.hpp"

#include <algorithm>
#include <cmath>

#include "wastefactor/cascade.hpp"
#include "wastefactor/errors.hpp"

namespace wastefactor {

void validate(const DataCenterProfile& p) {
  if (!(p.p_info > 0.0) || !std::isfinite(p.p_info)) {
    throw InvalidInput("p_info must be finite and > 0");
  }
  if (!(p.p_non_info >= 0.0) || !std::isfinite(p.p_non_info)) {
    throw InvalidInput("p_non_info must be finite and >= 0");
  }
  if (!(p.p_aux >= 0.0) || !std::isfinite(p.p_aux)) {
    throw InvalidInput("p_aux must be finite and >= 0");
  }
}

DataCenterReport evaluate_datacenter(const DataCenterProfile& p) {
  validate(p);
  const double it_load = p.p_info + p.p_non_info;
  DataCenterReport r;
  r.eta = p.p_info / it_load;
  r.pue = (it_load + p.p_aux) / it_load;
  r.w_bar = 1.0 / r.eta;
  return r;
}

double w_bar_from_aux(const DataCenterProfile& p) {
  validate(p);
  if (!(p.p_aux > 0.0)) throw DomainError("w_bar_from_aux requires p_aux > 0");
  const double pue = evaluate_datacenter(p).pue;
  return p.p_aux / (p.p_info * (pue - 1.0));
}

DataCenterComparison compare_datacenters(const DataCenterProfile& a, const DataCenterProfile& b) {
  DataCenterComparison c{evaluate_datacenter(a), evaluate_datacenter(b), Verdict::kTie};
  const double wa = c.first.w_bar;
  const double wb = c.second.w_bar;
  if (std::abs(wa - wb) <= 1e-12 * std::max(wa, wb)) {
    c.verdict = Verdict::kTie;
  } else {
    c.verdict = wa < wb ? Verdict::kFirst : Verdict::kSecond;
  }
  return c;
}

double inter_datacenter_w(double w_source, double g_channel, double g_rx, double w_sink) {
  return generalized_link_w({w_source, g_channel, g_rx, w_sink});
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::kFirst: return "first";
    case Verdict::kSecond: return "second";
    case Verdict::kTie: return "tie";
  }
  return "tie";
}

}  // namespace wastefactor
