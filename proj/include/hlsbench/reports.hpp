#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace hlsbench {

enum class ReportFormat { VitisXml, GenericKv };

ReportFormat parse_report_format(const std::string& s);
const char* report_format_name(ReportFormat f);

// Normalized PPA record. Fields a tool did not report stay absent; deltas are
// only computed over present pairs.
struct PpaRecord {
  std::optional<long> latency_cycles;
  std::optional<double> latency_ns;
  std::optional<long> lut;
  std::optional<long> ff;
  std::optional<long> dsp;
  std::optional<long> bram;
  std::optional<double> wns_ns;
  std::optional<double> fmax_mhz;
  std::optional<double> power_mw;
  std::optional<double> clock_ns;           // target/achieved period backing derivations
  std::optional<std::string> power_source;  // which report power was read from
};

bool operator==(const PpaRecord& a, const PpaRecord& b);

void to_json(nlohmann::json& j, const PpaRecord& r);
void from_json(const nlohmann::json& j, PpaRecord& r);

// Latency and area portion of a post-synthesis report. Generic format is
// one key=value per line (keys: latency_cycles, clock_ns, lut, ff, dsp,
// bram, wns_ns, power_mw); the XML flavor reads the csynth.xml subset with
// latency, estimated clock and resource elements. latency_cycles, lut and
// ff are required.
PpaRecord parse_hls_synth_report(const std::string& text, ReportFormat format);

// Timing / power / utilization portion of a completed implementation run.
// wns comes from the timing report, total on-chip power from the power
// report; post-impl lut/ff override HLS estimates when present. fmax is
// derived as 1000/(clock_ns - wns_ns) unless reported directly.
PpaRecord parse_impl_report(const std::string& timing_text, const std::string& power_text,
                            const std::string& util_text, ReportFormat format);

// Overlays impl fields onto the synthesis estimate and validates the record
// invariants (latency_ns == cycles * clock, fmax == 1000/(clock - wns), both
// to 1e-6 relative).
PpaRecord merge_ppa(const PpaRecord& synth_part, const PpaRecord& impl_part);

}  // namespace hlsbench
