#include "wastefactor/network.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

#include "wastefactor/errors.hpp"

namespace wastefactor {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// mt19937_64's output sequence is fixed by the standard; the distributions
// are not, so the conversion to [0, 1) is done here.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_count(double v) { return v >= 1.0 && v == std::floor(v) && v <= 1e7; }

std::vector<Point2> hex_sites(int count, double disk_radius_m) {
  if (count == 1) return {Point2{}};
  const double spacing =
      disk_radius_m * std::sqrt(2.0 * std::numbers::pi / (std::sqrt(3.0) * count));
  const int extent = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count)))) + 2;

  struct Site {
    long long norm2;  // |i a1 + j a2|^2 in units of spacing^2
    double angle;
    int i;
    int j;
  };
  std::vector<Site> sites;
  for (int i = -extent; i <= extent; ++i) {
    for (int j = -extent; j <= extent; ++j) {
      const double x = i + 0.5 * j;
      const double y = 0.5 * std::sqrt(3.0) * j;
      double angle = std::atan2(y, x);
      if (angle < 0.0) angle += 2.0 * std::numbers::pi;
      sites.push_back({static_cast<long long>(i) * i + static_cast<long long>(i) * j +
                           static_cast<long long>(j) * j,
                       angle, i, j});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) {
    return std::tie(a.norm2, a.angle, a.i, a.j) < std::tie(b.norm2, b.angle, b.i, b.j);
  });

  std::vector<Point2> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const auto& s = sites[k];
    out.push_back({spacing * (s.i + 0.5 * s.j), spacing * 0.5 * std::sqrt(3.0) * s.j});
  }
  return out;
}

std::string format_value(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << v;
  return os.str();
}

}  // namespace

const char* to_string(SweepParameter p) noexcept {
  switch (p) {
    case SweepParameter::kPsLossDb: return "ps_loss_db";
    case SweepParameter::kUeCount: return "ue_count";
    case SweepParameter::kBsCount: return "bs_count";
  }
  return "ps_loss_db";
}

void validate(const ScenarioConfig& c) {
  if (c.bands.empty()) throw InvalidInput("scenario needs at least one band");
  for (const auto& b : c.bands) validate(b);
  if (!(c.cell_radius_m > 0.0) || !std::isfinite(c.cell_radius_m)) {
    throw InvalidInput("cell_radius_m must be finite and > 0");
  }
  if (!(c.min_distance_m >= 1.0) || !std::isfinite(c.min_distance_m)) {
    throw InvalidInput("min_distance_m must be >= 1");
  }
  if (c.ue_count < 1) throw InvalidInput("ue_count must be >= 1");
  if (c.bs_count < 1) throw InvalidInput("bs_count must be >= 1");
  if (c.directions.empty()) throw InvalidInput("scenario needs at least one direction");
  if (c.los_policy.nlos_beyond_m && !(*c.los_policy.nlos_beyond_m >= 0.0)) {
    throw InvalidInput("los distance threshold must be >= 0");
  }

  const auto& v = c.sweep.values;
  if (v.empty()) throw InvalidInput("sweep values must be nonempty");
  const bool increasing = std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  const bool decreasing = std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end();
  if (!increasing && !decreasing) throw InvalidInput("sweep values must be strictly ordered");
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidInput("sweep values must be finite");
    if (c.sweep.parameter == SweepParameter::kPsLossDb && x < 0.0) {
      throw InvalidInput("ps_loss_db sweep values must be >= 0");
    }
    if (c.sweep.parameter != SweepParameter::kPsLossDb && !is_count(x)) {
      throw InvalidInput(std::string(to_string(c.sweep.parameter)) +
                         " sweep values must be positive integers");
    }
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Placements place_entities(const ScenarioConfig& c) {
  if (c.ue_count < 1 || c.bs_count < 1 || !(c.cell_radius_m > 0.0)) {
    throw InvalidInput("placement needs ue_count >= 1, bs_count >= 1, cell_radius_m > 0");
  }
  Placements p;
  p.bs = hex_sites(c.bs_count, c.cell_radius_m);

  std::mt19937_64 rng(c.seed);
  p.ue.reserve(c.ue_count);
  for (int k = 0; k < c.ue_count; ++k) {
    const double r = c.cell_radius_m * std::sqrt(unit_uniform(rng));
    const double theta = 2.0 * std::numbers::pi * unit_uniform(rng);
    p.ue.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return p;
}

NetworkAggregate evaluate_network(const ScenarioConfig& c, const RadioProfile& profile,
                                  Direction direction, const Placements& placements) {
  if (placements.bs.empty() || placements.ue.empty()) {
    throw InvalidInput("network needs at least one BS and one UE");
  }
  const std::size_t n_bs = placements.bs.size();
  std::vector<double> rate_per_bs(n_bs, 0.0);
  std::vector<int> attached(n_bs, 0);

  NetworkAggregate agg;
  double per_link_loads_w = 0.0;
  double bs_fixed_w = 0.0;
  double cooling = profile.cooling_overhead;

  for (const auto& ue : placements.ue) {
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < n_bs; ++b) {
      const double dx = ue.x - placements.bs[b].x;
      const double dy = ue.y - placements.bs[b].y;
      const double d2 = dx * dx + dy * dy;
      if (d2 < best_d2) {
        best_d2 = d2;
        best = b;
      }
    }
    const double d = std::max(std::sqrt(best_d2), c.min_distance_m);
    const LinkReport link =
        evaluate_link(profile, d, c.los_policy.is_los(d), direction, c.cef_mode);

    rate_per_bs[best] += link.rate_bps;
    ++attached[best];
    agg.path_consumed_w += link.p_path_w;
    agg.signal_out_w += link.p_signal_out_w;
    per_link_loads_w += link.ue_fixed_w + cooling * link.bs_path_w;
    bs_fixed_w = link.bs_fixed_w;
  }

  for (std::size_t b = 0; b < n_bs; ++b) {
    if (attached[b] > 0) agg.aggregate_rate_bps += rate_per_bs[b] / attached[b];
  }

  agg.aggregate_consumed_w = agg.path_consumed_w;
  if (c.cef_mode == CefMode::kTotal) {
    agg.aggregate_consumed_w +=
        per_link_loads_w + static_cast<double>(n_bs) * bs_fixed_w * (1.0 + cooling);
  }
  agg.w_total = agg.signal_out_w > 0.0 ? agg.path_consumed_w / agg.signal_out_w
                                       : std::numeric_limits<double>::infinity();
  agg.network_cef_bpj = agg.aggregate_rate_bps / agg.aggregate_consumed_w;
  return agg;
}

ScenarioConfig sweep_point(const ScenarioConfig& c, std::size_t index) {
  if (index >= c.sweep.values.size()) throw InvalidInput("sweep point index out of range");
  ScenarioConfig point = c;
  const double v = c.sweep.values[index];
  switch (c.sweep.parameter) {
    case SweepParameter::kPsLossDb:
      for (auto& b : point.bands) b.ps_loss_db = v;
      break;
    case SweepParameter::kUeCount:
      point.ue_count = static_cast<int>(v);
      break;
    case SweepParameter::kBsCount:
      point.bs_count = static_cast<int>(v);
      break;
  }
  // A component sweep leaves the geometry alone, so every point shares the
  // first point's draw; count sweeps redraw per point.
  const bool geometry_changes = c.sweep.parameter != SweepParameter::kPsLossDb;
  point.seed = derive_seed(c.seed, geometry_changes ? index : 0);
  point.sweep.values = {v};
  return point;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config, unsigned threads) {
  validate(config);
  const std::size_t n_points = config.sweep.values.size();
  std::vector<std::vector<SweepRow>> per_point(n_points);
  std::vector<std::exception_ptr> errors(n_points);

  auto evaluate_point = [&](std::size_t i) {
    try {
      const ScenarioConfig point = sweep_point(config, i);
      const Placements placements = place_entities(point);
      for (const auto& band : point.bands) {
        for (Direction dir : point.directions) {
          const NetworkAggregate agg = evaluate_network(point, band, dir, placements);
          per_point[i].push_back({config.sweep.parameter, config.sweep.values[i],
                                  band.carrier_frequency_ghz, dir, agg.aggregate_rate_bps,
                                  agg.w_total, agg.aggregate_consumed_w, agg.network_cef_bpj});
        }
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n_points)));
  if (workers == 1) {
    for (std::size_t i = 0; i < n_points; ++i) evaluate_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n_points; i = next++) evaluate_point(i);
      });
    }
  }

  for (std::size_t i = 0; i < n_points; ++i) {
    if (!errors[i]) continue;
    const std::string where = "sweep point " + std::to_string(i) + " (" +
                              to_string(config.sweep.parameter) + "=" +
                              format_value(config.sweep.values[i]) + "): ";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + e.what());
    } catch (const DomainError& e) {
      throw DomainError(where + e.what());
    }
  }

  std::vector<SweepRow> rows;
  for (auto& p : per_point) rows.insert(rows.end(), p.begin(), p.end());
  return rows;
}

}  // namespace wastefactor
