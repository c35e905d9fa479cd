#pragma once

#include <string>
#include <vector>

#include "hlsbench/engine.hpp"
#include "hlsbench/metrics.hpp"

namespace hlsbench {

enum class EmitFormat { Csv, Json };

// Per-task deltas of the best candidate among the first k samples against
// the task's reference PPA; tasks without a comparable pair are omitted.
struct TaskDelta {
  std::string task_id;
  int k = 1;
  DeltaMetric metric = DeltaMetric::Lut;
  std::optional<double> delta_pct;
};

std::vector<TaskDelta> compute_task_deltas(const RunReport& report);

// Pareto frontier per task over all synthesis-passing candidate records.
struct TaskFrontier {
  std::string task_id;
  std::vector<std::string> point_ids;
};

std::vector<TaskFrontier> compute_frontiers(const RunReport& report);

std::string pass_table_csv(const RunReport& report);
std::string deltas_csv(const std::vector<TaskDelta>& deltas);
std::string dse_improvement_csv(const RunReport& report);
std::string power_per_design_csv(const RunReport& report);
std::string pareto_csv(const RunReport& report);

nlohmann::json report_json(const RunReport& report);

// Writes the metric tables (and plot CSVs when requested) under dir.
std::vector<fs::path> emit_report_files(const RunReport& report, const fs::path& dir,
                                        EmitFormat format, bool plots);

// Side-by-side pass-rate listing for one or more runs.
std::string compare_runs_text(const std::vector<RunReport>& reports);

}  // namespace hlsbench
