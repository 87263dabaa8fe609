// Acceptance checks AC1..AC9. One line per criterion; exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "wastefactor/cascade.hpp"
#include "wastefactor/config.hpp"
#include "wastefactor/datacenter.hpp"
#include "wastefactor/network.hpp"
#include "wastefactor/report.hpp"

namespace wf = wastefactor;
namespace io = wastefactor::io;
using wf::testing::rel_err;

namespace {

constexpr double kRel = 1e-12;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first failure message and keeps a running worst-case number.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void track(double err) { worst_ = std::max(worst_, err); }
  double worst() const { return worst_; }
  Outcome done(std::string detail) {
    if (out_.ok) out_.detail = std::move(detail);
    return out_;
  }

 private:
  Outcome out_;
  double worst_ = 0.0;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---------------------------------------------------------------------- AC1

Outcome ac1() {
  Check c;
  const wf::DataCenterProfile a{140, 40, 150};
  const wf::DataCenterProfile b{60, 30, 75};
  const auto cmp = wf::compare_datacenters(a, b);
  const double tol = 1e-3;
  const auto near = [&](double got, double want, const char* name) {
    c.expect(std::abs(got - want) <= tol, std::string(name) + " = " + fmt("%.6f", got));
  };
  near(cmp.first.eta, 0.778, "eta_A");
  near(cmp.second.eta, 0.667, "eta_B");
  near(cmp.first.pue, 1.833, "PUE_A");
  near(cmp.second.pue, 1.833, "PUE_B");
  near(cmp.first.w_bar, 1.286, "W_A");
  near(cmp.second.w_bar, 1.5, "W_B");
  c.expect(cmp.verdict == wf::Verdict::kFirst, "verdict is not A");
  return c.done("eta 0.778/0.667, PUE 1.833, W 1.286/1.5, verdict A");
}

// ---------------------------------------------------------------------- AC2

Outcome ac2() {
  Check c;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto spec = wf::testing::random_cascade(rng);
    const double closed = wf::cascade_waste_factor(spec);
    const double trace = wf::cascade_power_trace(spec).waste_factor;
    const double oracle = wf::testing::bookkeeping_waste_factor(spec.stages, spec.source_power_w);
    c.track(rel_err(closed, trace));
    c.track(rel_err(closed, oracle));
  }
  c.expect(c.worst() <= kRel, "worst rel err " + fmt("%.3e", c.worst()));
  return c.done("1000 cascades, worst rel err " + fmt("%.2e", c.worst()));
}

// ---------------------------------------------------------------------- AC3

Outcome ac3() {
  Check c;
  std::mt19937_64 rng(2025);
  for (int i = 0; i < 1000; ++i) {
    const auto spec = wf::testing::random_cascade(rng);
    c.track(rel_err(wf::cascade_noise_factor(spec), wf::testing::additive_noise_factor(spec.stages)));
  }
  c.expect(c.worst() <= kRel, "worst rel err " + fmt("%.3e", c.worst()));
  return c.done("1000 cascades, worst rel err " + fmt("%.2e", c.worst()));
}

// ---------------------------------------------------------------------- AC4

Outcome ac4() {
  Check c;
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    const auto link = wf::testing::random_link(rng);
    // Only W matters downstream of stage 1, so the source gain is arbitrary.
    const std::vector<wf::StageSpec> chain{
        {"src", 1.0, link.w_source, 1.0},
        {"channel", link.g_channel, 1.0 / link.g_channel, 1.0 / link.g_channel},
        {"rx", link.g_rx, link.w_sink, 1.0},
    };
    c.track(rel_err(wf::generalized_link_w(link), wf::cascade_waste_factor(chain)));
  }
  c.expect(c.worst() <= kRel, "worst rel err " + fmt("%.3e", c.worst()));
  return c.done("1000 links, worst rel err " + fmt("%.2e", c.worst()));
}

// ---------------------------------------------------------------------- AC5

Outcome ac5() {
  Check c;
  std::mt19937_64 rng(2027);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    auto spec = wf::testing::random_cascade(rng);
    const double w = wf::cascade_waste_factor(spec);
    const double f = wf::cascade_noise_factor(spec);
    c.expect(w >= 1.0 && f >= 1.0, "W or F below 1 on case " + std::to_string(i));

    // Drive level does not change W.
    auto scaled = spec;
    scaled.source_power_w *= wf::testing::log_uniform(rng, 1e-6, 1e6);
    const double err = rel_err(wf::cascade_power_trace(spec).waste_factor,
                               wf::cascade_power_trace(scaled).waste_factor);
    c.expect(err <= 1e-9, "drive-level invariance off by " + fmt("%.3e", err));

    // Raising any W_i never lowers W.
    for (std::size_t k = 0; k < spec.stages.size(); ++k) {
      auto bumped = spec;
      bumped.stages[k].waste_factor *= 1.5;
      c.expect(wf::cascade_waste_factor(bumped) >= w, "W not monotone in stage " + std::to_string(k));
    }

    const auto passive = wf::testing::random_passive_cascade(rng);
    const double inv_g = 1.0 / wf::cascade_total_gain(passive.stages);
    c.expect(rel_err(wf::cascade_waste_factor(passive), inv_g) <= kRel, "passive W != 1/G");
    c.expect(rel_err(wf::cascade_noise_factor(passive), inv_g) <= kRel, "passive F != 1/G");

    const wf::DataCenterProfile dc{wf::testing::log_uniform(rng, 1e-3, 1e6),
                                   wf::testing::log_uniform(rng, 1e-3, 1e6), 0.0};
    const double k = wf::testing::log_uniform(rng, 1e-3, 1e3);
    const auto base = wf::evaluate_datacenter({dc.p_info, dc.p_non_info, dc.p_info * 0.5});
    const auto big = wf::evaluate_datacenter({dc.p_info * k, dc.p_non_info * k, dc.p_info * 0.5 * k});
    c.expect(rel_err(base.eta, big.eta) <= kRel && rel_err(base.pue, big.pue) <= kRel &&
                 rel_err(base.w_bar, big.w_bar) <= kRel,
             "data center metrics not scale invariant");
    ++checked;
  }
  return c.done(std::to_string(checked) + " cases each: W,F>=1, passive W=F=1/G, drive level, "
                "data center scale, W monotone in W_i");
}

// ------------------------------------------------------------------ AC6/AC7

using Table = std::map<std::pair<double, wf::Direction>, std::vector<double>>;

// (band, direction) -> CEF per sweep point, in sweep order.
Table by_series(const std::vector<wf::SweepRow>& rows) {
  Table t;
  for (const auto& r : rows) t[{r.band_ghz, r.direction}].push_back(r.network_cef_bpj);
  return t;
}

constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5};

Outcome ac6() {
  Check c;
  for (std::uint64_t seed : kSeeds) {
    auto cfg = io::default_scenario(wf::SweepParameter::kPsLossDb);
    cfg.seed = seed;
    c.expect(cfg.ue_count == 100, "default PS sweep is not at 100 UEs");
    const auto t = by_series(wf::run_sweep(cfg, 4));
    for (const auto& [key, cef] : t) {
      for (std::size_t i = 1; i < cef.size(); ++i) {
        c.expect(cef[i] < cef[i - 1], "seed " + std::to_string(seed) + ": CEF not decreasing at " +
                                          fmt("%g GHz", key.first) + " point " + std::to_string(i));
      }
    }
    for (auto dir : {wf::Direction::kUplink, wf::Direction::kDownlink}) {
      const auto& lo = t.at({28.0, dir});
      const auto& hi = t.at({142.0, dir});
      for (std::size_t i = 0; i < lo.size(); ++i) {
        c.expect(hi[i] > lo[i], "seed " + std::to_string(seed) + ": 142 GHz not above 28 GHz (" +
                                    wf::to_string(dir) + ") at point " + std::to_string(i));
      }
    }
  }
  return c.done("PS 0..14 dB, 100 UEs, seeds 1-5: strictly decreasing; 142 > 28 GHz both ways");
}

Outcome ac7() {
  Check c;
  for (std::uint64_t seed : kSeeds) {
    auto cfg = io::default_scenario(wf::SweepParameter::kUeCount);
    cfg.seed = seed;
    cfg.directions = {wf::Direction::kUplink};
    const auto t = by_series(wf::run_sweep(cfg, 4));
    const auto& lo = t.at({28.0, wf::Direction::kUplink});
    const auto& hi = t.at({142.0, wf::Direction::kUplink});
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (i > 0) {
        c.expect(lo[i] <= lo[i - 1] && hi[i] <= hi[i - 1],
                 "seed " + std::to_string(seed) + ": uplink CEF rose at point " + std::to_string(i));
      }
      c.expect(hi[i] > lo[i], "seed " + std::to_string(seed) + ": 142 GHz uplink not above 28 GHz");
    }
  }
  return c.done("UE 10..100, seeds 1-5: uplink non-increasing; 142 > 28 GHz");
}

// ---------------------------------------------------------------------- AC8

Outcome ac8() {
  Check c;
  int compared = 0;
  for (auto p : {wf::SweepParameter::kPsLossDb, wf::SweepParameter::kUeCount,
                 wf::SweepParameter::kBsCount}) {
    auto cfg = io::default_scenario(p);
    cfg.seed = 0x5eed;
    const std::string ref = io::emit_csv(wf::run_sweep(cfg, 1));
    for (unsigned threads : {1u, 2u, 3u, 8u}) {
      c.expect(io::emit_csv(wf::run_sweep(cfg, threads)) == ref,
               std::string(wf::to_string(p)) + " differs at " + std::to_string(threads) + " threads");
      ++compared;
    }
  }
  return c.done(std::to_string(compared) + " reruns over 3 sweeps, 1-8 threads: identical CSV bytes");
}

// ---------------------------------------------------------------------- AC9

Outcome ac9() {
  Check c;
  // name -> {28 GHz, 142 GHz}, in the units the profile uses.
  const std::map<std::string, std::pair<double, double>> table{
      {"bandwidth_hz", {400e6, 4000e6}},
      {"bs_aperture_m2", {0.5, 0.5}},
      {"ue_aperture_m2", {0.0005, 0.0005}},
      {"bs_antenna_gain_dbi", {45.2, 59.1}},
      {"ue_antenna_gain_dbi", {15.2, 29.1}},
      {"ple_los", {2.0, 2.0}},
      {"ple_nlos", {3.2, 3.2}},
      {"bs_elements", {1024, 4096}},
      {"ue_elements", {8, 64}},
      {"lna_fom_per_mw", {24.83, 8.33}},
      {"lna_gain_db", {20, 20}},
      {"mixer_loss_db", {6, 6}},
      {"ps_loss_db", {10, 10}},
      {"lo_power_dbm", {10, 19.9}},
      {"pa_efficiency", {0.28, 0.208}},
      {"antenna_efficiency", {0.6, 0.6}},
      {"cooling_overhead", {0.2, 0.2}},
      {"ue_screen_power_w", {0.5, 0.5}},
  };
  int matched = 0;
  for (const char* name : {"28ghz", "142ghz"}) {
    const bool first = std::string(name) == "28ghz";
    const auto echoed = nlohmann::json::parse(io::echo(io::radio_preset(name)));
    for (const auto& [field, values] : table) {
      const double want = first ? values.first : values.second;
      const bool present = echoed.contains(field) && echoed[field].is_number();
      c.expect(present && echoed[field].get<double>() == want,
               std::string(name) + "." + field + " does not match");
      matched += present ? 1 : 0;
    }
    c.expect(io::radio_preset(name) == io::parse_radio_profile(io::echo(io::radio_preset(name))),
             std::string(name) + " echo does not round-trip");
  }
  return c.done(std::to_string(matched) + " table values matched exactly, echo round-trips");
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "data center golden", 1.0, ac1},
      {"AC2", "waste factor closed form vs power trace", 5.0, ac2},
      {"AC3", "noise factor closed form vs noise propagation", 5.0, ac3},
      {"AC4", "generalized link W vs three-stage cascade", 5.0, ac4},
      {"AC5", "property suite", 5.0, ac5},
      {"AC6", "PS loss sweep ordering", 30.0, ac6},
      {"AC7", "UE sweep uplink ordering", 30.0, ac7},
      {"AC8", "sweep determinism", 30.0, ac8},
      {"AC9", "band preset fidelity", 1.0, ac9},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (out.ok && secs > cr.limit_s) {
      out = {false, "took " + fmt("%.2f s", secs) + ", limit " + fmt("%.0f s", cr.limit_s)};
    }
    failed += out.ok ? 0 : 1;
    std::printf("[%s] %s %s: %s (%.3f s)\n", out.ok ? "PASS" : "FAIL", cr.id, cr.title,
                out.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
