#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hlsbench {

enum class BackendStrategy { Default, PerformanceExplore, AreaExplore };

const char* backend_strategy_name(BackendStrategy s);
BackendStrategy parse_backend_strategy(const std::string& s);

// Declarative DSE space. Every field is a candidate-value list; a missing
// YAML key defaults to a singleton holding the tool default (clock 10.0,
// pipeline off, ii 1, dataflow off, unroll 1, partition 1, allocation 0,
// dsp_full_reg off, strategy Default).
struct DseSpec {
  std::vector<double> clock_period_ns{10.0};
  std::vector<bool> enable_pipeline{false};
  std::vector<int> pipeline_ii{1};
  std::vector<bool> enable_dataflow{false};
  std::vector<int> unroll_factor{1};
  std::vector<int> array_partition_factor{1};
  std::vector<int> allocation_limit_add{0};  // 0 = disabled
  std::vector<bool> dsp_full_reg{false};
  std::vector<BackendStrategy> backend_strategy{BackendStrategy::Default};

  void validate() const;
  std::uint64_t product_size() const;
};

// One concrete assignment of all DSE parameters.
struct DsePoint {
  double clock_period_ns = 10.0;
  bool enable_pipeline = false;
  int pipeline_ii = 1;
  bool enable_dataflow = false;
  int unroll_factor = 1;
  int array_partition_factor = 1;
  int allocation_limit_add = 0;
  bool dsp_full_reg = false;
  BackendStrategy backend_strategy = BackendStrategy::Default;

  // Stable id derived from the field values alone.
  std::string point_id() const;
  std::string canonical_key() const;
  // ii has no effect without pipelining; the normal form pins it to 1.
  DsePoint normalized() const;
};

bool operator==(const DsePoint& a, const DsePoint& b);

void to_json(nlohmann::json& j, const DsePoint& p);
void from_json(const nlohmann::json& j, DsePoint& p);

// All tool defaults; always evaluated so DSE gains have a fixed reference.
DsePoint baseline_point();

enum class PolicyMode { Exhaustive, Capped, Random };

PolicyMode parse_policy_mode(const std::string& s);
const char* policy_mode_name(PolicyMode m);

struct ExplorationPolicy {
  PolicyMode mode = PolicyMode::Exhaustive;
  std::optional<int> max_points;       // required for capped; optional cap for random
  std::optional<std::uint64_t> seed;   // required for random
  bool prune_dependent = true;

  void validate() const;
};

void to_json(nlohmann::json& j, const DseSpec& s);
void from_json(const nlohmann::json& j, DseSpec& s);
void to_json(nlohmann::json& j, const ExplorationPolicy& p);
void from_json(const nlohmann::json& j, ExplorationPolicy& p);

// Parses the nine-key YAML schema; `vivado_strategy` is accepted as an alias
// for backend_strategy and a `policy:` block is ignored here.
DseSpec parse_dse_spec(const std::string& yaml_text);

// Reads the optional `policy:` block out of the same YAML document.
ExplorationPolicy parse_policy_block(const std::string& yaml_text);

// Expansion order is deterministic (odometer over the field lists, clock
// outermost). prune_dependent collapses pipeline-off points to ii=1 and
// deduplicates; with pruning off the raw Cartesian product is returned.
// Capped keeps the first max_points; random takes a seeded sample.
std::vector<DsePoint> expand(const DseSpec& spec, const ExplorationPolicy& policy);

enum class DirectiveKind {
  Clock,
  Pipeline,
  Dataflow,
  Unroll,
  ArrayPartition,
  AllocationLimit,
  DspReg,
  BackendStrategy,
};

const char* directive_kind_name(DirectiveKind k);

// Tool-agnostic directive IR; adapters translate this into tool scripts.
struct Directive {
  DirectiveKind kind;
  std::map<std::string, std::string> args;
};

using DirectiveSet = std::vector<Directive>;

// Mandatory clock first, then one directive per non-default field, in a
// fixed order: pipeline, dataflow, unroll, array_partition,
// allocation_limit, dsp_reg, backend_strategy.
DirectiveSet render_directives(const DsePoint& point);

}  // namespace hlsbench
