#include <doctest.h>

#include <regex>

#include "hlsbench/errors.hpp"
#include "hlsbench/reports.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::fixture_dir;

namespace {

std::string synth_xml() { return read_file(fixture_dir() / "reports" / "csynth_basic.xml"); }
std::string timing_rpt() { return read_file(fixture_dir() / "reports" / "impl_timing.rpt"); }
std::string power_rpt() { return read_file(fixture_dir() / "reports" / "impl_power.rpt"); }
std::string util_rpt() { return read_file(fixture_dir() / "reports" / "impl_util.rpt"); }

}  // namespace

TEST_SUITE_BEGIN("reports");

TEST_CASE("vitis-style synthesis report parses the authored values") {
  PpaRecord r = parse_hls_synth_report(synth_xml(), ReportFormat::VitisXml);
  CHECK(r.latency_cycles == 200);
  CHECK(r.lut == 512);
  CHECK(r.ff == 301);
  CHECK(r.dsp == 3);
  CHECK(r.bram == 2);
  CHECK(r.clock_ns == doctest::Approx(5.0));
  CHECK(r.latency_ns == doctest::Approx(1000.0));
  CHECK(!r.wns_ns.has_value());
  CHECK(!r.power_mw.has_value());
}

TEST_CASE("generic report accepts an all-zero design") {
  PpaRecord r = parse_hls_synth_report("latency_cycles=0\nlut=0\nff=0\n",
                                       ReportFormat::GenericKv);
  CHECK(r.latency_cycles == 0);
  CHECK(r.lut == 0);
  CHECK(r.ff == 0);
  CHECK(!r.dsp.has_value());
}

TEST_CASE("generic fixture report parses") {
  PpaRecord r = parse_hls_synth_report(
      read_file(fixture_dir() / "reports" / "synth_generic.txt"), ReportFormat::GenericKv);
  CHECK(r.latency_cycles == 200);
  CHECK(r.lut == 512);
  CHECK(r.ff == 301);
  CHECK(r.dsp == 3);
  CHECK(r.bram == 2);
  CHECK(r.latency_ns == doctest::Approx(2000.0));
}

TEST_CASE("missing lut is FieldMissing(lut)") {
  SUBCASE("generic") {
    try {
      parse_hls_synth_report("latency_cycles=10\nff=5\n", ReportFormat::GenericKv);
      FAIL("expected FieldMissing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::FieldMissing);
      CHECK(contains(e.what(), "lut"));
    }
  }
  SUBCASE("xml") {
    std::string mutated = std::regex_replace(synth_xml(), std::regex("<LUT>512</LUT>"), "");
    try {
      parse_hls_synth_report(mutated, ReportFormat::VitisXml);
      FAIL("expected FieldMissing");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::FieldMissing);
      CHECK(contains(e.what(), "lut"));
    }
  }
}

TEST_CASE("missing latency is FieldMissing(latency_cycles)") {
  std::string mutated = std::regex_replace(
      synth_xml(), std::regex("<Average-caseLatency>200</Average-caseLatency>"), "");
  mutated = std::regex_replace(mutated,
                               std::regex("<Worst-caseLatency>220</Worst-caseLatency>"), "");
  try {
    parse_hls_synth_report(mutated, ReportFormat::VitisXml);
    FAIL("expected FieldMissing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMissing);
    CHECK(contains(e.what(), "latency_cycles"));
  }
}

TEST_CASE("impl reports parse wns, power and derived fmax") {
  PpaRecord r = parse_impl_report(timing_rpt(), power_rpt(), util_rpt(),
                                  ReportFormat::VitisXml);
  CHECK(r.wns_ns == doctest::Approx(0.45));
  CHECK(r.power_mw == doctest::Approx(127.0));
  CHECK(r.clock_ns == doctest::Approx(5.0));
  CHECK(r.fmax_mhz == doctest::Approx(1000.0 / 4.55));  // 219.78 MHz
  CHECK(r.lut == 498);
  CHECK(r.ff == 287);
  CHECK(r.power_source == std::optional<std::string>("impl"));
}

TEST_CASE("negative slack passes through") {
  PpaRecord r = parse_impl_report("wns_ns=-0.2\nclock_ns=5.0\n", "power_mw=90\n", "",
                                  ReportFormat::GenericKv);
  CHECK(r.wns_ns == doctest::Approx(-0.2));
  CHECK(r.fmax_mhz == doctest::Approx(1000.0 / 5.2));
}

TEST_CASE("empty power report is FieldMissing(power)") {
  try {
    parse_impl_report("wns_ns=0.1\nclock_ns=5.0\n", "", "", ReportFormat::GenericKv);
    FAIL("expected FieldMissing");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMissing);
    CHECK(contains(e.what(), "power"));
  }
}

TEST_CASE("unrecognized text is UnrecognizedFormat") {
  try {
    parse_hls_synth_report("this is not a report", ReportFormat::GenericKv);
    FAIL("expected UnrecognizedFormat");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnrecognizedFormat);
  }
  CHECK_THROWS_AS(parse_hls_synth_report("plain text", ReportFormat::VitisXml), Error);
}

TEST_CASE("merge keeps impl absent fields absent") {
  PpaRecord synth = parse_hls_synth_report(synth_xml(), ReportFormat::VitisXml);
  PpaRecord merged = merge_ppa(synth, PpaRecord{});
  CHECK(!merged.wns_ns.has_value());
  CHECK(!merged.power_mw.has_value());
  CHECK(!merged.fmax_mhz.has_value());
  CHECK(merged.lut == 512);
}

TEST_CASE("merge overlays impl measurements onto synth estimates") {
  PpaRecord synth = parse_hls_synth_report(synth_xml(), ReportFormat::VitisXml);
  PpaRecord impl = parse_impl_report(timing_rpt(), power_rpt(), util_rpt(),
                                     ReportFormat::VitisXml);
  PpaRecord merged = merge_ppa(synth, impl);
  CHECK(merged.lut == 498);   // post-impl overrides the estimate
  CHECK(merged.ff == 287);
  CHECK(merged.latency_cycles == 200);
  CHECK(merged.wns_ns == doctest::Approx(0.45));
  CHECK(merged.power_mw == doctest::Approx(127.0));
  CHECK(merged.fmax_mhz == doctest::Approx(219.78).epsilon(1e-4));
}

TEST_CASE("merge is idempotent") {
  PpaRecord synth = parse_hls_synth_report(synth_xml(), ReportFormat::VitisXml);
  PpaRecord impl = parse_impl_report(timing_rpt(), power_rpt(), util_rpt(),
                                     ReportFormat::VitisXml);
  PpaRecord once = merge_ppa(synth, impl);
  PpaRecord twice = merge_ppa(once, PpaRecord{});
  CHECK(once == twice);
}

TEST_CASE("inconsistent latency is ConsistencyError") {
  PpaRecord synth;
  synth.latency_cycles = 100;
  synth.lut = 10;
  synth.ff = 10;
  synth.clock_ns = 5.0;
  synth.latency_ns = 123.0;
  try {
    merge_ppa(synth, PpaRecord{});
    FAIL("expected ConsistencyError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConsistencyError);
  }
}

TEST_CASE("ppa record round-trips through json") {
  PpaRecord synth = parse_hls_synth_report(synth_xml(), ReportFormat::VitisXml);
  PpaRecord impl = parse_impl_report(timing_rpt(), power_rpt(), util_rpt(),
                                     ReportFormat::VitisXml);
  for (const PpaRecord& r : {synth, impl, merge_ppa(synth, impl)}) {
    nlohmann::json j = r;
    PpaRecord back = j.get<PpaRecord>();
    CHECK(back == r);
  }
}

TEST_SUITE_END();
