#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hlsbench/corpus.hpp"
#include "hlsbench/dse.hpp"
#include "hlsbench/gateway.hpp"
#include "hlsbench/metrics.hpp"
#include "hlsbench/reports.hpp"
#include "hlsbench/toolchain.hpp"

namespace hlsbench {

// Result of pushing one (task, candidate, point) through the gated ladder.
struct EvaluationRecord {
  std::string task_id;
  int sample_index = 0;  // -1 marks the task's reference design
  DsePoint point;
  std::map<StageId, StageRecord> stage_records;
  std::optional<PpaRecord> ppa;  // present only when synthesis passed

  std::string point_id() const { return point.point_id(); }
};

struct SkipEntry {
  std::string task_id;
  int sample_index = -1;  // -1: whole-task generation failure
  std::string reason;
};

struct RunReport {
  std::string run_id;
  std::string model_id;
  int k = 1;
  std::string adapter_name;
  std::string target_part;
  std::vector<std::string> task_ids;                // corpus order
  std::vector<EvaluationRecord> records;            // candidates, canonical order
  std::vector<EvaluationRecord> reference_records;  // reference designs at baseline
  std::vector<SkipEntry> skips;
  std::map<std::string, std::string> per_design_best;               // task -> point_id
  std::map<std::string, std::map<int, double>> pass_at_k_summary;   // stage -> k -> rate
  std::map<std::string, PpaRecord> reference_ppa;
  std::map<std::string, bool> dse_improved_per_task;
  int dse_eligible = 0;
  int dse_improved_count = 0;
  double dse_threshold_pct = 20.0;
  std::string started_at;
  std::string finished_at;
};

struct EngineConfig {
  fs::path output_dir = "out";
  std::string run_id;  // generated when empty
  int jobs = 1;
  int throttle_ms = 0;  // debugging aid: slows each work unit down
  std::string target_part = "xc7a200tffv1156-1";
  StageTimeouts timeouts;
  bool evaluate_reference = true;
  double dse_improvement_threshold_pct = 20.0;
  // persisted so resume can rebuild the exact adapter; falls back to the
  // descriptor of the adapter passed to run_benchmark
  std::optional<AdapterConfig> adapter_config;
};

fs::path run_dir(const fs::path& output_dir, const std::string& run_id);

// Per-task solution set: the task-local dse.yaml when present, the run
// defaults otherwise, expanded under the policy; the all-defaults baseline
// point is always included.
std::vector<DsePoint> points_for_task(const BenchmarkTask& task, const DseSpec& dse_defaults,
                                      const ExplorationPolicy& policy);

// Gated ladder for one candidate across its points. A candidate that failed
// extraction yields no records (the caller records the skip).
std::vector<EvaluationRecord> evaluate_candidate(const BenchmarkTask& task,
                                                 const Candidate& candidate,
                                                 const std::vector<DsePoint>& points,
                                                 const Adapter& adapter,
                                                 const fs::path& work_root,
                                                 const StageTimeouts& timeouts,
                                                 const std::string& target_part);

// Full run: sample K candidates per task, evaluate every (candidate, point)
// unit on a pool of `jobs` workers, persist incrementally under
// <output_dir>/runs/<run_id>/ and summarize. The report is independent of
// jobs and scheduling order.
RunReport run_benchmark(const Corpus& corpus, const ModelConfig& model_cfg,
                        const DseSpec& dse_defaults, const ExplorationPolicy& policy,
                        const Adapter& adapter, int k, const EngineConfig& cfg);

// Continues a persisted run: completed (task, sample, point) triples are
// skipped; the final report equals an uninterrupted run's.
RunReport resume_run(const fs::path& output_dir, const std::string& run_id);

// Loads a finished (or partially written) run back from disk.
RunReport load_run_report(const fs::path& output_dir, const std::string& run_id);

PassMatrix build_pass_matrix(const RunReport& report, PassKind kind);

nlohmann::json record_to_json(const EvaluationRecord& record, const fs::path& run_root);
EvaluationRecord record_from_json(const nlohmann::json& j, const fs::path& run_root);
nlohmann::json summary_to_json(const RunReport& report);

}  // namespace hlsbench
