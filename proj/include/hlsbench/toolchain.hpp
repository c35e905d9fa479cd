#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hlsbench/corpus.hpp"
#include "hlsbench/dse.hpp"
#include "hlsbench/gateway.hpp"
#include "hlsbench/reports.hpp"

namespace hlsbench {

enum class StageId { Compile, CSim, Synth, Impl };

constexpr std::array<StageId, 4> kStageOrder{StageId::Compile, StageId::CSim, StageId::Synth,
                                             StageId::Impl};

const char* stage_name(StageId s);
StageId parse_stage(const std::string& s);
int stage_rank(StageId s);

enum class StageStatus { Pass, Fail, Timeout, ToolError, NotRun };

const char* stage_status_name(StageStatus s);
StageStatus parse_stage_status(const std::string& s);

struct StageRecord {
  StageId stage = StageId::Compile;
  StageStatus status = StageStatus::NotRun;
  double wall_time_s = 0.0;
  fs::path log_path;
  std::vector<fs::path> report_paths;
};

struct Workspace {
  fs::path dir;  // unique per (task, candidate, point)
  std::vector<fs::path> sources;
  std::vector<fs::path> scripts;
  std::string target_part;
  double clock_period_ns = 10.0;
};

struct AdapterDescriptor {
  std::string name;
  std::set<StageId> supports;
  std::optional<fs::path> tool_binary;  // absent for the mock
};

struct StageTimeouts {
  double compile_s = 120;
  double csim_s = 600;
  double synth_s = 3600;
  double impl_s = 3600;

  double for_stage(StageId s) const;
};

// Tool adapter contract. Adapters are stateless between calls; execute()
// reports tool failures as statuses and throws only for harness IO trouble.
class Adapter {
 public:
  virtual ~Adapter() = default;

  virtual AdapterDescriptor descriptor() const = 0;
  virtual ReportFormat report_format() const = 0;

  // Drops adapter-specific run scripts (and the mock's profile) into the
  // workspace. Must be deterministic for fixed inputs.
  virtual void render_scripts(const Workspace& ws, const BenchmarkTask& task,
                              const DsePoint& point) const = 0;

  virtual StageRecord execute(const Workspace& ws, StageId stage, double timeout_s) const = 0;
};

struct AdapterConfig {
  std::string name = "mock";
  std::optional<fs::path> tool_binary;
  std::optional<fs::path> backend_binary;    // implementation tool (vivado)
  std::optional<fs::path> script_template;   // extra template appended to scripts
  std::string default_part = "xc7a200tffv1156-1";
};

void to_json(nlohmann::json& j, const AdapterConfig& cfg);
void from_json(const nlohmann::json& j, AdapterConfig& cfg);
void to_json(nlohmann::json& j, const StageTimeouts& t);
void from_json(const nlohmann::json& j, StageTimeouts& t);

AdapterConfig load_adapter_config(const fs::path& yaml_path);

std::unique_ptr<Adapter> make_adapter(const AdapterConfig& cfg);
std::unique_ptr<Adapter> make_mock_adapter(const AdapterConfig& cfg);
std::unique_ptr<Adapter> make_vitis_adapter(const AdapterConfig& cfg);
std::unique_ptr<Adapter> make_catapult_adapter(const AdapterConfig& cfg);

// Lays out a fresh, isolated workspace: candidate source, testbench,
// point.json and the adapter's scripts. Re-preparing the same inputs
// produces byte-identical files.
Workspace prepare_workspace(const Adapter& adapter, const BenchmarkTask& task,
                            const Candidate& candidate, const DsePoint& point,
                            const fs::path& workspace_dir, const std::string& target_part);

// Executes one stage under the gating contract: every earlier stage must
// have passed in this workspace. Status files under the workspace keep the
// ladder auditable.
StageRecord run_stage(const Adapter& adapter, const Workspace& ws, StageId stage,
                      double timeout_s);

std::optional<StageStatus> read_stage_status(const Workspace& ws, StageId stage);

// ---- mock cost model ----

// Per-design fingerprint for the deterministic mock toolchain; read from the
// task's meta.yaml `mock:` block, overridable per candidate with
// `// mock: key=value ...` source lines.
struct MockProfile {
  long base_cycles = 100;
  long base_lut = 500;
  long base_ff = 300;
  long base_dsp = 2;
  long base_bram = 1;
  double base_power_mw = 100.0;
  double min_period_ns = 3.0;
  std::optional<StageId> fail_at;
};

MockProfile mock_profile_from_yaml(const std::string& yaml_text);
std::string mock_profile_to_yaml(const MockProfile& profile);
MockProfile mock_profile_for_task(const BenchmarkTask& task);
MockProfile apply_mock_source_overrides(MockProfile profile, const std::string& source);

// Closed-form cost model:
//   latency_cycles = ceil(base_cycles / unroll) * (ii if pipelined else 2)
//   latency_ns     = latency_cycles * clock
//   lut = base_lut * unroll * partition, ff = base_ff * unroll
//   power_mw = base_power_mw * (1 + 0.1 * (unroll - 1))
//   wns = clock - min_period (Impl fails when negative), fmax = 1000/min_period
// Stages before fail_at pass, fail_at fails, later stages do not run.
std::pair<std::map<StageId, StageStatus>, PpaRecord> mock_evaluate(const MockProfile& profile,
                                                                   const DsePoint& point);

}  // namespace hlsbench
