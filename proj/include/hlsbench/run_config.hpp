#pragma once

#include <map>
#include <optional>
#include <string>

#include "hlsbench/dse.hpp"
#include "hlsbench/engine.hpp"
#include "hlsbench/gateway.hpp"
#include "hlsbench/toolchain.hpp"

namespace hlsbench {

// Everything a run needs, loadable from hlsbench.yaml with CLI flag
// overrides on top (precedence: flags > file > defaults).
struct RunConfig {
  fs::path corpus_path = "fixtures/corpus";
  std::string adapter_name = "mock";
  std::optional<fs::path> adapter_config_path;
  std::string model_id = "fixture-model";
  std::string backend = "replay_cache";
  std::optional<double> temperature;  // default: 0 for k==1, 0.8 otherwise
  int max_tokens = 4096;
  std::map<std::string, std::string> api_params;
  int k = 1;
  int jobs = 1;
  ExplorationPolicy policy;
  bool policy_explicit = false;  // flags or config file picked a policy
  std::string target_part = "xc7a200tffv1156-1";
  StageTimeouts timeouts;
  fs::path output_dir = "out";
  std::optional<fs::path> dse_defaults_path;
  std::string run_id;
  int throttle_ms = 0;
  bool evaluate_reference = true;
};

RunConfig load_run_config(const fs::path& yaml_path);

double effective_temperature(const RunConfig& cfg);
ModelConfig model_config_from(const RunConfig& cfg);
AdapterConfig adapter_config_from(const RunConfig& cfg);
EngineConfig engine_config_from(const RunConfig& cfg);
DseSpec dse_defaults_from(const RunConfig& cfg);

// Run policy: explicit flags/config win, otherwise the policy block inside
// the dse_defaults file applies, otherwise exhaustive-pruned.
ExplorationPolicy policy_from(const RunConfig& cfg);

}  // namespace hlsbench
