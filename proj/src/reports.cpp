#include "hlsbench/reports.hpp"

#include <cmath>
#include <map>
#include <regex>

#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

ReportFormat parse_report_format(const std::string& s) {
  if (s == "vitis_xml") return ReportFormat::VitisXml;
  if (s == "generic_kv") return ReportFormat::GenericKv;
  throw Error(Errc::UnrecognizedFormat, "unknown report format: " + s);
}

const char* report_format_name(ReportFormat f) {
  return f == ReportFormat::VitisXml ? "vitis_xml" : "generic_kv";
}

bool operator==(const PpaRecord& a, const PpaRecord& b) {
  return a.latency_cycles == b.latency_cycles && a.latency_ns == b.latency_ns &&
         a.lut == b.lut && a.ff == b.ff && a.dsp == b.dsp && a.bram == b.bram &&
         a.wns_ns == b.wns_ns && a.fmax_mhz == b.fmax_mhz && a.power_mw == b.power_mw &&
         a.clock_ns == b.clock_ns && a.power_source == b.power_source;
}

void to_json(nlohmann::json& j, const PpaRecord& r) {
  j = nlohmann::json::object();
  if (r.latency_cycles) j["latency_cycles"] = *r.latency_cycles;
  if (r.latency_ns) j["latency_ns"] = *r.latency_ns;
  if (r.lut) j["lut"] = *r.lut;
  if (r.ff) j["ff"] = *r.ff;
  if (r.dsp) j["dsp"] = *r.dsp;
  if (r.bram) j["bram"] = *r.bram;
  if (r.wns_ns) j["wns_ns"] = *r.wns_ns;
  if (r.fmax_mhz) j["fmax_mhz"] = *r.fmax_mhz;
  if (r.power_mw) j["power_mw"] = *r.power_mw;
  if (r.clock_ns) j["clock_ns"] = *r.clock_ns;
  if (r.power_source) j["power_source"] = *r.power_source;
}

void from_json(const nlohmann::json& j, PpaRecord& r) {
  r = PpaRecord{};
  if (j.contains("latency_cycles")) r.latency_cycles = j["latency_cycles"].get<long>();
  if (j.contains("latency_ns")) r.latency_ns = j["latency_ns"].get<double>();
  if (j.contains("lut")) r.lut = j["lut"].get<long>();
  if (j.contains("ff")) r.ff = j["ff"].get<long>();
  if (j.contains("dsp")) r.dsp = j["dsp"].get<long>();
  if (j.contains("bram")) r.bram = j["bram"].get<long>();
  if (j.contains("wns_ns")) r.wns_ns = j["wns_ns"].get<double>();
  if (j.contains("fmax_mhz")) r.fmax_mhz = j["fmax_mhz"].get<double>();
  if (j.contains("power_mw")) r.power_mw = j["power_mw"].get<double>();
  if (j.contains("clock_ns")) r.clock_ns = j["clock_ns"].get<double>();
  if (j.contains("power_source")) r.power_source = j["power_source"].get<std::string>();
}

namespace {

struct KvTable {
  std::map<std::string, std::string> entries;
  bool has(const std::string& k) const { return entries.count(k) > 0; }
  long as_long(const std::string& k) const {
    try {
      return std::stol(entries.at(k));
    } catch (const std::exception&) {
      throw Error(Errc::UnrecognizedFormat, "bad integer for key " + k);
    }
  }
  double as_double(const std::string& k) const {
    try {
      return std::stod(entries.at(k));
    } catch (const std::exception&) {
      throw Error(Errc::UnrecognizedFormat, "bad number for key " + k);
    }
  }
};

KvTable parse_kv(const std::string& text) {
  KvTable t;
  for (const std::string& raw : split_lines(text)) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    t.entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return t;
}

// First <tag>text</tag> occurrence, optionally within a scope substring.
std::optional<std::string> xml_text(const std::string& text, const std::string& tag) {
  const std::string open = "<" + tag + ">";
  const std::string close = "</" + tag + ">";
  auto b = text.find(open);
  if (b == std::string::npos) return std::nullopt;
  b += open.size();
  auto e = text.find(close, b);
  if (e == std::string::npos) return std::nullopt;
  return trim(text.substr(b, e - b));
}

std::optional<std::string> xml_scope(const std::string& text, const std::string& tag) {
  return xml_text(text, tag);
}

long to_long(const std::string& s, const std::string& what) {
  try {
    return std::stol(s);
  } catch (const std::exception&) {
    throw Error(Errc::UnrecognizedFormat, "bad integer for " + what + ": " + s);
  }
}

double to_double(const std::string& s, const std::string& what) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw Error(Errc::UnrecognizedFormat, "bad number for " + what + ": " + s);
  }
}

std::optional<double> first_double_on_line_with(const std::string& text,
                                                const std::string& marker) {
  static const std::regex num(R"(-?[0-9]+(\.[0-9]+)?)");
  for (const std::string& line : split_lines(text)) {
    auto pos = line.find(marker);
    if (pos == std::string::npos) continue;
    std::smatch m;
    std::string tail = line.substr(pos + marker.size());
    if (std::regex_search(tail, m, num)) return std::stod(m.str());
  }
  return std::nullopt;
}

// Table value one or more lines below a header marker (Vivado summary style).
std::optional<double> table_value_below(const std::string& text, const std::string& header) {
  static const std::regex num(R"(^\s*(-?[0-9]+(\.[0-9]+)?))");
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].find(header) == std::string::npos) continue;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      std::smatch m;
      if (std::regex_search(lines[j], m, num)) return std::stod(m.str(1));
    }
  }
  return std::nullopt;
}

void derive_fields(PpaRecord& r) {
  if (!r.latency_ns && r.latency_cycles && r.clock_ns) {
    r.latency_ns = static_cast<double>(*r.latency_cycles) * *r.clock_ns;
  }
  if (!r.fmax_mhz && r.clock_ns && r.wns_ns) {
    double period = *r.clock_ns - *r.wns_ns;
    if (period > 0) r.fmax_mhz = 1000.0 / period;
  }
}

bool rel_close(double a, double b) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-6 * scale;
}

}  // namespace

PpaRecord parse_hls_synth_report(const std::string& text, ReportFormat format) {
  if (trim(text).empty()) throw Error(Errc::UnrecognizedFormat, "empty synthesis report");
  PpaRecord r;

  if (format == ReportFormat::GenericKv) {
    KvTable kv = parse_kv(text);
    if (kv.entries.empty()) {
      throw Error(Errc::UnrecognizedFormat, "no key=value lines in synthesis report");
    }
    if (!kv.has("latency_cycles")) throw Error(Errc::FieldMissing, "latency_cycles");
    if (!kv.has("lut")) throw Error(Errc::FieldMissing, "lut");
    if (!kv.has("ff")) throw Error(Errc::FieldMissing, "ff");
    r.latency_cycles = kv.as_long("latency_cycles");
    r.lut = kv.as_long("lut");
    r.ff = kv.as_long("ff");
    if (kv.has("dsp")) r.dsp = kv.as_long("dsp");
    if (kv.has("bram")) r.bram = kv.as_long("bram");
    if (kv.has("clock_ns")) r.clock_ns = kv.as_double("clock_ns");
    if (kv.has("wns_ns")) r.wns_ns = kv.as_double("wns_ns");
    if (kv.has("power_mw")) {
      r.power_mw = kv.as_double("power_mw");
      r.power_source = "synth";
    }
  } else {
    if (text.find('<') == std::string::npos) {
      throw Error(Errc::UnrecognizedFormat, "not an XML synthesis report");
    }
    auto latency = xml_text(text, "Average-caseLatency");
    if (!latency) latency = xml_text(text, "Worst-caseLatency");
    if (!latency) throw Error(Errc::FieldMissing, "latency_cycles");
    r.latency_cycles = to_long(*latency, "latency");

    // Target period converts cycles to ns; the estimated period is the
    // tool's critical-path guess and would disagree with the impl clock.
    if (auto clock = xml_text(text, "TargetClockPeriod")) {
      r.clock_ns = to_double(*clock, "TargetClockPeriod");
    }

    auto resources = xml_scope(text, "Resources");
    if (!resources) throw Error(Errc::FieldMissing, "lut");
    auto lut = xml_text(*resources, "LUT");
    if (!lut) throw Error(Errc::FieldMissing, "lut");
    auto ff = xml_text(*resources, "FF");
    if (!ff) throw Error(Errc::FieldMissing, "ff");
    r.lut = to_long(*lut, "LUT");
    r.ff = to_long(*ff, "FF");
    if (auto dsp = xml_text(*resources, "DSP")) {
      r.dsp = to_long(*dsp, "DSP");
    } else if (auto dsp48 = xml_text(*resources, "DSP48E")) {
      r.dsp = to_long(*dsp48, "DSP48E");
    }
    if (auto bram = xml_text(*resources, "BRAM_18K")) r.bram = to_long(*bram, "BRAM_18K");
  }

  derive_fields(r);
  return r;
}

PpaRecord parse_impl_report(const std::string& timing_text, const std::string& power_text,
                            const std::string& util_text, ReportFormat format) {
  PpaRecord r;

  if (format == ReportFormat::GenericKv) {
    KvTable timing = parse_kv(timing_text);
    if (!timing.has("wns_ns")) throw Error(Errc::FieldMissing, "wns_ns");
    r.wns_ns = timing.as_double("wns_ns");
    if (timing.has("clock_ns")) r.clock_ns = timing.as_double("clock_ns");
    if (timing.has("fmax_mhz")) r.fmax_mhz = timing.as_double("fmax_mhz");

    KvTable power = parse_kv(power_text);
    if (!power.has("power_mw")) throw Error(Errc::FieldMissing, "power");
    r.power_mw = power.as_double("power_mw");
    r.power_source = "impl";

    KvTable util = parse_kv(util_text);
    if (util.has("lut")) r.lut = util.as_long("lut");
    if (util.has("ff")) r.ff = util.as_long("ff");
  } else {
    // Vivado text reports: timing summary, power summary, utilization table.
    auto wns = table_value_below(timing_text, "WNS(ns)");
    if (!wns) throw Error(Errc::FieldMissing, "wns_ns");
    r.wns_ns = *wns;
    static const std::regex clock_row(R"(\}\s*([0-9]+(\.[0-9]+)?))");
    std::smatch m;
    if (std::regex_search(timing_text, m, clock_row)) {
      r.clock_ns = std::stod(m.str(1));
    } else if (auto req = first_double_on_line_with(timing_text, "Requirement")) {
      r.clock_ns = *req;
    }

    auto watts = first_double_on_line_with(power_text, "Total On-Chip Power (W)");
    if (!watts) throw Error(Errc::FieldMissing, "power");
    r.power_mw = *watts * 1000.0;
    r.power_source = "impl";

    auto lut = first_double_on_line_with(util_text, "Slice LUTs");
    if (!lut) lut = first_double_on_line_with(util_text, "CLB LUTs");
    if (lut) r.lut = static_cast<long>(*lut);
    auto ff = first_double_on_line_with(util_text, "Slice Registers");
    if (!ff) ff = first_double_on_line_with(util_text, "CLB Registers");
    if (ff) r.ff = static_cast<long>(*ff);
  }

  derive_fields(r);
  return r;
}

PpaRecord merge_ppa(const PpaRecord& synth_part, const PpaRecord& impl_part) {
  if (!synth_part.latency_cycles) throw Error(Errc::FieldMissing, "latency_cycles");
  if (!synth_part.lut) throw Error(Errc::FieldMissing, "lut");
  if (!synth_part.ff) throw Error(Errc::FieldMissing, "ff");

  PpaRecord r = synth_part;
  if (impl_part.lut) r.lut = impl_part.lut;
  if (impl_part.ff) r.ff = impl_part.ff;
  if (impl_part.dsp) r.dsp = impl_part.dsp;
  if (impl_part.bram) r.bram = impl_part.bram;
  if (impl_part.wns_ns) r.wns_ns = impl_part.wns_ns;
  if (impl_part.fmax_mhz) r.fmax_mhz = impl_part.fmax_mhz;
  if (impl_part.power_mw) {
    r.power_mw = impl_part.power_mw;
    r.power_source = impl_part.power_source ? impl_part.power_source : std::optional<std::string>("impl");
  }
  if (impl_part.clock_ns) r.clock_ns = impl_part.clock_ns;
  if (impl_part.latency_ns) r.latency_ns = impl_part.latency_ns;
  if (impl_part.latency_cycles) r.latency_cycles = impl_part.latency_cycles;

  derive_fields(r);

  if (r.latency_ns && r.latency_cycles && r.clock_ns) {
    double expected = static_cast<double>(*r.latency_cycles) * *r.clock_ns;
    if (!rel_close(*r.latency_ns, expected)) {
      throw Error(Errc::ConsistencyError,
                  "latency_ns " + format_double(*r.latency_ns) + " != cycles*clock " +
                      format_double(expected));
    }
  }
  if (r.fmax_mhz && r.clock_ns && r.wns_ns) {
    double period = *r.clock_ns - *r.wns_ns;
    if (period > 0 && !rel_close(*r.fmax_mhz, 1000.0 / period)) {
      throw Error(Errc::ConsistencyError,
                  "fmax_mhz " + format_double(*r.fmax_mhz) + " != 1000/(clock - wns)");
    }
  }
  return r;
}

}  // namespace hlsbench
