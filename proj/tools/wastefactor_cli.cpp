// wastefactor command line front end.
//
//   wastefactor cascade    --input chain.json
//   wastefactor datacenter --input pair.json --format json
//   wastefactor link       --band 142ghz --direction up --distance 50
//   wastefactor sweep      --param ue_count --seed 7 --out fig3b.csv
//
// Exit status: 0 ok, 1 bad input, 2 numeric/domain failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "wastefactor/cascade.hpp"
#include "wastefactor/config.hpp"
#include "wastefactor/errors.hpp"
#include "wastefactor/network.hpp"
#include "wastefactor/radio_link.hpp"
#include "wastefactor/report.hpp"

namespace wf = wastefactor;
namespace io = wastefactor::io;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDomain = 2;
constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string input;
  std::string out;
  std::string manifest;
  std::string format;
  std::string band = "both";
  std::string direction;
  std::string cef_mode;
  std::optional<std::uint64_t> seed;
  std::string param = "ps_loss_db";
  std::optional<double> distance_m;
  bool nlos = false;
  unsigned threads = 1;
};

// What was read from --input, if anything.
struct Loaded {
  std::optional<io::ConfigDocument> doc;
  std::optional<io::RunManifest> manifest;
  bool has_seed = false;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wf::InvalidInput("cannot open input '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw wf::InvalidInput("cannot open output '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw wf::InvalidInput("write failed for '" + path + "'");
}

Loaded load(const std::string& path) {
  Loaded l;
  if (path.empty()) return l;
  const std::string text = read_all(path);
  l.manifest = io::parse_manifest(text);
  l.doc = io::parse_config(text);
  if (l.manifest) {
    l.has_seed = true;
  } else {
    // parse_config already rejected malformed JSON.
    const auto j = nlohmann::json::parse(text);
    l.has_seed = j.is_object() && j.contains("seed");
  }
  return l;
}

template <class T>
T take(const Loaded& l, const char* subcommand) {
  if (const T* v = std::get_if<T>(&*l.doc)) return *v;
  throw wf::InvalidInput(std::string("input is not a ") + subcommand + " config");
}

std::uint64_t parse_seed(const std::string& text, const char* origin) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (text.empty() || text[0] == '-') throw std::invalid_argument("sign");
    v = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw wf::InvalidInput(std::string(origin) + ": expected unsigned 64-bit integer, got '" +
                           text + "'");
  }
  return v;
}

std::string resolve_format(const Options& o, const Loaded& l) {
  std::string f = o.format;
  if (f.empty() && l.manifest) f = l.manifest->output_format;
  if (f.empty()) f = "csv";
  if (f != "csv" && f != "json") throw wf::InvalidInput("format must be csv or json");
  return f;
}

std::vector<wf::Direction> directions_from(const std::string& s) {
  if (s == "up") return {wf::Direction::kUplink};
  if (s == "down") return {wf::Direction::kDownlink};
  return {wf::Direction::kUplink, wf::Direction::kDownlink};
}

wf::CefMode cef_from(const std::string& s) {
  return s == "path" ? wf::CefMode::kPathOnly : wf::CefMode::kTotal;
}

wf::SweepParameter param_from(const std::string& s) {
  if (s == "ue_count") return wf::SweepParameter::kUeCount;
  if (s == "bs_count") return wf::SweepParameter::kBsCount;
  return wf::SweepParameter::kPsLossDb;
}

struct Output {
  std::string bytes;
  std::string config_echo;
  std::uint64_t seed = 0;
};

Output run_cascade(const Options&, const Loaded& l, const std::string& fmt) {
  if (!l.doc) throw wf::InvalidInput("cascade needs --input");
  const auto spec = take<wf::CascadeSpec>(l, "cascade");
  const auto report = wf::cascade_power_trace(spec);
  return {fmt == "csv" ? io::emit_csv(spec, report) : io::emit_json(spec, report), io::echo(spec)};
}

Output run_datacenter(const Options&, const Loaded& l, const std::string& fmt) {
  if (!l.doc) throw wf::InvalidInput("datacenter needs --input");
  const auto in = take<io::DataCenterInput>(l, "datacenter");
  return {fmt == "csv" ? io::emit_csv(in) : io::emit_json(in), io::echo(in)};
}

Output run_link(const Options& o, const Loaded& l, const std::string& fmt) {
  io::LinkConfig c;
  if (l.doc) {
    c = take<io::LinkConfig>(l, "link");
  } else {
    c.profile = io::radio_preset(o.band == "both" ? "28ghz" : o.band);
  }
  if (l.doc && o.band != "both") c.profile = io::radio_preset(o.band);
  if (o.direction == "both") throw wf::InvalidInput("link evaluates one direction: use up or down");
  if (!o.direction.empty()) c.direction = directions_from(o.direction).front();
  if (!o.cef_mode.empty()) c.cef_mode = cef_from(o.cef_mode);
  if (o.distance_m) c.distance_m = *o.distance_m;
  if (o.nlos) c.los = false;

  const auto report = wf::evaluate_link(c.profile, c.distance_m, c.los, c.direction, c.cef_mode);
  return {fmt == "csv" ? io::emit_csv(report) : io::emit_json(report), io::echo(c)};
}

Output run_sweep(const Options& o, const Loaded& l, const std::string& fmt) {
  wf::ScenarioConfig c =
      l.doc ? take<wf::ScenarioConfig>(l, "sweep") : io::default_scenario(param_from(o.param));

  if (o.seed) {
    c.seed = *o.seed;
  } else if (!l.has_seed) {
    const char* env = std::getenv("WASTEFACTOR_SEED");
    c.seed = env ? parse_seed(env, "WASTEFACTOR_SEED") : kDefaultSeed;
  }

  if (o.band != "both") {
    const double ghz = io::radio_preset(o.band).carrier_frequency_ghz;
    std::erase_if(c.bands, [&](const wf::RadioProfile& b) { return b.carrier_frequency_ghz != ghz; });
    if (c.bands.empty()) throw wf::InvalidInput("no configured band matches --band " + o.band);
  }
  if (!o.direction.empty()) c.directions = directions_from(o.direction);
  if (!o.cef_mode.empty()) c.cef_mode = cef_from(o.cef_mode);

  const unsigned threads = o.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : o.threads;
  const auto rows = wf::run_sweep(c, threads);
  return {fmt == "csv" ? io::emit_csv(rows) : io::emit_json(rows), io::echo(c), c.seed};
}

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--input", o.input, "JSON config or run manifest ('-' for stdin)");
  sub.add_option("--out", o.out, "output file (default stdout)");
  sub.add_option("--format", o.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--manifest", o.manifest, "write a run manifest here");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Waste factor, noise factor and CEF calculator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  auto* cascade = app.add_subcommand("cascade", "W, F and power trace of a cascade");
  add_common(*cascade, o);

  auto* datacenter = app.add_subcommand("datacenter", "evaluate or compare data centers");
  add_common(*datacenter, o);

  auto* link = app.add_subcommand("link", "single link report");
  add_common(*link, o);
  link->add_option("--band", o.band)->check(CLI::IsMember({"28ghz", "142ghz", "both"}));
  link->add_option("--direction", o.direction)->check(CLI::IsMember({"up", "down", "both"}));
  link->add_option("--cef-mode", o.cef_mode)->check(CLI::IsMember({"path", "total"}));
  link->add_option("--distance", o.distance_m, "BS-UE distance in meters");
  link->add_flag("--nlos", o.nlos, "use the NLOS path loss exponent");

  auto* sweep = app.add_subcommand("sweep", "network sweep over PS loss, UE count or BS count");
  add_common(*sweep, o);
  sweep->add_option("--band", o.band)->check(CLI::IsMember({"28ghz", "142ghz", "both"}));
  sweep->add_option("--direction", o.direction)->check(CLI::IsMember({"up", "down", "both"}));
  sweep->add_option("--cef-mode", o.cef_mode)->check(CLI::IsMember({"path", "total"}));
  sweep->add_option("--seed", o.seed, "placement seed");
  sweep->add_option("--param", o.param, "built-in sweep when no --input is given")
      ->check(CLI::IsMember({"ps_loss_db", "ue_count", "bs_count"}));
  sweep->add_option("--threads", o.threads, "worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const Loaded loaded = load(o.input);
    const std::string fmt = resolve_format(o, loaded);

    Output result;
    if (cascade->parsed()) result = run_cascade(o, loaded, fmt);
    if (datacenter->parsed()) result = run_datacenter(o, loaded, fmt);
    if (link->parsed()) result = run_link(o, loaded, fmt);
    if (sweep->parsed()) result = run_sweep(o, loaded, fmt);

    const std::string sum = io::checksum(result.bytes);
    if (loaded.manifest && loaded.manifest->output_format == fmt &&
        loaded.manifest->output_checksum != sum) {
      std::cerr << "warning: output checksum " << sum << " differs from manifest "
                << loaded.manifest->output_checksum << "\n";
    }
    write_all(o.out, result.bytes);
    if (!o.manifest.empty()) {
      io::RunManifest m;
      m.config_echo = result.config_echo;
      m.seed = result.seed;
      m.output_format = fmt;
      m.output_checksum = sum;
      write_all(o.manifest, io::emit_manifest(m));
    }
  } catch (const wf::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const wf::DomainError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
