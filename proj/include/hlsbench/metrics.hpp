#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlsbench/reports.hpp"

namespace hlsbench {

enum class PassKind { Compilation, Simulation, Synthesis };

const char* pass_kind_name(PassKind k);

// N tasks x K samples of per-stage pass booleans.
struct PassMatrix {
  PassKind kind = PassKind::Compilation;
  std::vector<std::vector<bool>> rows;

  int k() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
  std::size_t tasks() const { return rows.size(); }
  void validate() const;  // rectangular, K >= 1
};

// Fraction of tasks with at least one passing sample among the first k.
// Empirical count semantics: the result times N is always an integer.
double pass_at_k(const PassMatrix& m, int k);

enum class DeltaMetric { Lut, Ff, Power, Latency };

const char* delta_metric_name(DeltaMetric m);
DeltaMetric parse_delta_metric(const std::string& s);

struct DeltaRecord {
  std::string task_id;
  DeltaMetric metric = DeltaMetric::Lut;
  std::optional<double> delta_pct;  // absent = undefined (reference 0, generated > 0)
};

// 100 * (generated - reference) / reference; positive means the generated
// design uses more resource / latency than the reference.
DeltaRecord ppa_delta(const PpaRecord& gen, const PpaRecord& ref, DeltaMetric metric,
                      const std::string& task_id = "");

// True when the best DSE point improves at least one of latency_ns, lut, ff
// or power_mw by >= threshold_pct relative to the baseline point.
bool dse_improved(const PpaRecord& baseline, const PpaRecord& best,
                  double threshold_pct = 20.0);

struct ParetoPoint {
  std::string point_id;
  double latency_ns = 0;
  double area = 0;  // lut + ff
  double power_mw = 0;
};

// Non-dominated subset under minimization of all three objectives
// (dominance: <= everywhere, < somewhere). Result sorted by latency, then
// point_id. Duplicate objective vectors are all retained.
std::vector<std::string> pareto_frontier(const std::vector<ParetoPoint>& points);

}  // namespace hlsbench
