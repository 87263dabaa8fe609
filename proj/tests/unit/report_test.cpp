#include <clocale>
#include <cmath>
#include <locale>
#include <string>

#include "doctest.h"
#include "wastefactor/report.hpp"

using namespace wastefactor;
using namespace wastefactor::io;

namespace {

SweepRow sample_row() {
  return {SweepParameter::kPsLossDb, 10.0, 28.0, Direction::kUplink, 7.47105161e9,
          9.72281203e6, 122.276224, 6.10997899e7};
}

struct CommaDecimal : std::numpunct<char> {
  char do_decimal_point() const override { return ','; }
  char do_thousands_sep() const override { return '.'; }
  std::string do_grouping() const override { return "\3"; }
};

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1e9) == "1.00000000e+09");
  CHECK(format_number(0.0) == "0.00000000e+00");
  CHECK(format_number(-2.5e-7) == "-2.50000000e-07");
  CHECK(format_number(123456789.4) == "1.23456789e+08");
  CHECK(format_number(INFINITY) == "inf");
}

TEST_CASE("CSV quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("sweep CSV") {
  const std::vector<SweepRow> none;
  CHECK(emit_csv(none) == std::string(kSweepCsvHeader) + "\n");

  const std::vector<SweepRow> one{sample_row()};
  const std::string csv = emit_csv(one);
  CHECK(csv ==
        "param,value,band_ghz,direction,rate_bps,w_total,p_consumed_w,cef_bpj\n"
        "ps_loss_db,1.00000000e+01,2.80000000e+01,up,7.47105161e+09,9.72281203e+06,"
        "1.22276224e+02,6.10997899e+07\n");
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(emit_csv(one) == csv);
}

TEST_CASE("output ignores the global locale") {
  const std::locale saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  std::setlocale(LC_ALL, "de_DE.UTF-8");  // may not exist; harmless
  const std::vector<SweepRow> one{sample_row()};
  const std::string csv = emit_csv(one);
  const std::string json = emit_json(one);
  std::locale::global(saved);
  std::setlocale(LC_ALL, "C");
  CHECK(csv.find("1.00000000e+01") != std::string::npos);
  CHECK(json.find("7471051610") != std::string::npos);
  CHECK(json.find("7.471.051") == std::string::npos);
}

TEST_CASE("checksum is FNV-1a 64") {
  CHECK(checksum("") == "cbf29ce484222325");
  CHECK(checksum("a") == "af63dc4c8601ec8c");
  CHECK(checksum("foobar") == "85944171f73967e8");
}

TEST_CASE("cascade and link reports") {
  const CascadeSpec c{{StageSpec::make("amp", 5.0, 2.0, 1.5)}, 1.0};
  const auto r = cascade_power_trace(c);
  const std::string csv = emit_csv(c, r);
  CHECK(csv.rfind("stage,name,gain,waste_factor,noise_factor,signal_out_w,consumed_w\n", 0) == 0);
  CHECK(csv.find("1,amp,5.00000000e+00,2.00000000e+00") != std::string::npos);
  CHECK(csv.find("total,cascade,") != std::string::npos);
  CHECK(emit_json(c, r).find("\"waste_factor\": 2.0") != std::string::npos);

  const auto link = evaluate_link(radio_preset("28ghz"), 1e300, true, Direction::kUplink,
                                  CefMode::kTotal);
  const std::string json = emit_json(link);
  CHECK(json.find("\"w_link\": null") != std::string::npos);
  CHECK(json.find("\"fully_lossy\": true") != std::string::npos);
}

TEST_CASE("data center report") {
  const DataCenterInput pair{{{140.0, 40.0, 150.0}, {60.0, 30.0, 75.0}}};
  const std::string csv = emit_csv(pair);
  CHECK(csv.find("verdict,a,,") != std::string::npos);
  CHECK(emit_json(pair).find("\"lower_w_bar\": \"a\"") != std::string::npos);
}
