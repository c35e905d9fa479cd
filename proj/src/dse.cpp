#include "hlsbench/dse.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <random>
#include <unordered_set>

#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

const char* backend_strategy_name(BackendStrategy s) {
  switch (s) {
    case BackendStrategy::Default: return "Default";
    case BackendStrategy::PerformanceExplore: return "Performance_Explore";
    case BackendStrategy::AreaExplore: return "Area_Explore";
  }
  return "Default";
}

BackendStrategy parse_backend_strategy(const std::string& s) {
  if (s == "Default") return BackendStrategy::Default;
  if (s == "Performance_Explore") return BackendStrategy::PerformanceExplore;
  if (s == "Area_Explore") return BackendStrategy::AreaExplore;
  throw Error(Errc::DomainViolation, "unknown backend strategy: " + s);
}

void DseSpec::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw Error(Errc::DomainViolation, msg);
  };
  require(!clock_period_ns.empty(), "clock_period_ns must be non-empty");
  require(!enable_pipeline.empty(), "enable_pipeline must be non-empty");
  require(!pipeline_ii.empty(), "pipeline_ii must be non-empty");
  require(!enable_dataflow.empty(), "enable_dataflow must be non-empty");
  require(!unroll_factor.empty(), "unroll_factor must be non-empty");
  require(!array_partition_factor.empty(), "array_partition_factor must be non-empty");
  require(!allocation_limit_add.empty(), "allocation_limit_add must be non-empty");
  require(!dsp_full_reg.empty(), "dsp_full_reg must be non-empty");
  require(!backend_strategy.empty(), "backend_strategy must be non-empty");

  for (double c : clock_period_ns) require(c > 0, "clock_period_ns must be positive");
  for (int ii : pipeline_ii) require(ii >= 1, "pipeline_ii must be >= 1");
  for (int u : unroll_factor) require(u >= 1, "unroll_factor must be >= 1");
  for (int p : array_partition_factor) require(p >= 1, "array_partition_factor must be >= 1");
  for (int a : allocation_limit_add) require(a >= 0, "allocation_limit_add must be >= 0");
}

std::uint64_t DseSpec::product_size() const {
  std::uint64_t n = 1;
  n *= clock_period_ns.size();
  n *= enable_pipeline.size();
  n *= pipeline_ii.size();
  n *= enable_dataflow.size();
  n *= unroll_factor.size();
  n *= array_partition_factor.size();
  n *= allocation_limit_add.size();
  n *= dsp_full_reg.size();
  n *= backend_strategy.size();
  return n;
}

std::string DsePoint::canonical_key() const {
  std::string key;
  key += "clk=" + format_double(clock_period_ns);
  key += ";pipe=" + std::string(enable_pipeline ? "1" : "0");
  key += ";ii=" + std::to_string(pipeline_ii);
  key += ";df=" + std::string(enable_dataflow ? "1" : "0");
  key += ";unroll=" + std::to_string(unroll_factor);
  key += ";part=" + std::to_string(array_partition_factor);
  key += ";alloc=" + std::to_string(allocation_limit_add);
  key += ";dspreg=" + std::string(dsp_full_reg ? "1" : "0");
  key += ";strat=" + std::string(backend_strategy_name(backend_strategy));
  return key;
}

std::string DsePoint::point_id() const { return short_digest(canonical_key()); }

DsePoint DsePoint::normalized() const {
  DsePoint p = *this;
  if (!p.enable_pipeline) p.pipeline_ii = 1;
  return p;
}

bool operator==(const DsePoint& a, const DsePoint& b) {
  return a.canonical_key() == b.canonical_key();
}

void to_json(nlohmann::json& j, const DsePoint& p) {
  j = nlohmann::json{{"clock_period_ns", p.clock_period_ns},
                     {"enable_pipeline", p.enable_pipeline},
                     {"pipeline_ii", p.pipeline_ii},
                     {"enable_dataflow", p.enable_dataflow},
                     {"unroll_factor", p.unroll_factor},
                     {"array_partition_factor", p.array_partition_factor},
                     {"allocation_limit_add", p.allocation_limit_add},
                     {"dsp_full_reg", p.dsp_full_reg},
                     {"backend_strategy", backend_strategy_name(p.backend_strategy)},
                     {"point_id", p.point_id()}};
}

void from_json(const nlohmann::json& j, DsePoint& p) {
  j.at("clock_period_ns").get_to(p.clock_period_ns);
  j.at("enable_pipeline").get_to(p.enable_pipeline);
  j.at("pipeline_ii").get_to(p.pipeline_ii);
  j.at("enable_dataflow").get_to(p.enable_dataflow);
  j.at("unroll_factor").get_to(p.unroll_factor);
  j.at("array_partition_factor").get_to(p.array_partition_factor);
  j.at("allocation_limit_add").get_to(p.allocation_limit_add);
  j.at("dsp_full_reg").get_to(p.dsp_full_reg);
  p.backend_strategy = parse_backend_strategy(j.at("backend_strategy").get<std::string>());
}

DsePoint baseline_point() { return DsePoint{}; }

void to_json(nlohmann::json& j, const DseSpec& s) {
  std::vector<std::string> strategies;
  strategies.reserve(s.backend_strategy.size());
  for (BackendStrategy b : s.backend_strategy) strategies.push_back(backend_strategy_name(b));
  j = nlohmann::json{{"clock_period_ns", s.clock_period_ns},
                     {"enable_pipeline", s.enable_pipeline},
                     {"pipeline_ii", s.pipeline_ii},
                     {"enable_dataflow", s.enable_dataflow},
                     {"unroll_factor", s.unroll_factor},
                     {"array_partition_factor", s.array_partition_factor},
                     {"allocation_limit_add", s.allocation_limit_add},
                     {"dsp_full_reg", s.dsp_full_reg},
                     {"backend_strategy", strategies}};
}

void from_json(const nlohmann::json& j, DseSpec& s) {
  j.at("clock_period_ns").get_to(s.clock_period_ns);
  j.at("enable_pipeline").get_to(s.enable_pipeline);
  j.at("pipeline_ii").get_to(s.pipeline_ii);
  j.at("enable_dataflow").get_to(s.enable_dataflow);
  j.at("unroll_factor").get_to(s.unroll_factor);
  j.at("array_partition_factor").get_to(s.array_partition_factor);
  j.at("allocation_limit_add").get_to(s.allocation_limit_add);
  j.at("dsp_full_reg").get_to(s.dsp_full_reg);
  s.backend_strategy.clear();
  for (const auto& name : j.at("backend_strategy")) {
    s.backend_strategy.push_back(parse_backend_strategy(name.get<std::string>()));
  }
}

void to_json(nlohmann::json& j, const ExplorationPolicy& p) {
  j = nlohmann::json{{"mode", policy_mode_name(p.mode)},
                     {"prune_dependent", p.prune_dependent}};
  if (p.max_points) j["max_points"] = *p.max_points;
  if (p.seed) j["seed"] = *p.seed;
}

void from_json(const nlohmann::json& j, ExplorationPolicy& p) {
  p = ExplorationPolicy{};
  p.mode = parse_policy_mode(j.at("mode").get<std::string>());
  if (j.contains("prune_dependent")) p.prune_dependent = j["prune_dependent"].get<bool>();
  if (j.contains("max_points")) p.max_points = j["max_points"].get<int>();
  if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
}

PolicyMode parse_policy_mode(const std::string& s) {
  if (s == "exhaustive") return PolicyMode::Exhaustive;
  if (s == "capped") return PolicyMode::Capped;
  if (s == "random") return PolicyMode::Random;
  throw Error(Errc::DomainViolation, "unknown policy mode: " + s);
}

const char* policy_mode_name(PolicyMode m) {
  switch (m) {
    case PolicyMode::Exhaustive: return "exhaustive";
    case PolicyMode::Capped: return "capped";
    case PolicyMode::Random: return "random";
  }
  return "exhaustive";
}

void ExplorationPolicy::validate() const {
  if (mode == PolicyMode::Capped && !max_points) {
    throw Error(Errc::DomainViolation, "capped policy requires max_points");
  }
  if (mode == PolicyMode::Random && !seed) {
    throw Error(Errc::DomainViolation, "random policy requires a seed");
  }
  if (max_points && *max_points <= 0) {
    throw Error(Errc::DomainViolation, "max_points must be positive");
  }
}

namespace {

const std::unordered_set<std::string> kKnownKeys = {
    "clock_period_ns", "enable_pipeline", "pipeline_ii",
    "enable_dataflow", "unroll_factor",   "array_partition_factor",
    "allocation_limit_add", "dsp_full_reg", "backend_strategy",
    "vivado_strategy", "policy"};

template <typename T>
std::vector<T> as_list(const YAML::Node& node, const std::string& key) {
  std::vector<T> out;
  try {
    if (node.IsSequence()) {
      for (const auto& item : node) out.push_back(item.as<T>());
    } else {
      out.push_back(node.as<T>());
    }
  } catch (const YAML::Exception& e) {
    throw Error(Errc::DomainViolation, key + ": " + e.what());
  }
  return out;
}

}  // namespace

DseSpec parse_dse_spec(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw Error(Errc::YamlSyntax, e.what());
  }
  DseSpec spec;
  if (root.IsNull() || (root.IsMap() && root.size() == 0)) {
    spec.validate();
    return spec;
  }
  if (!root.IsMap()) throw Error(Errc::YamlSyntax, "DSE spec must be a YAML mapping");

  for (const auto& kv : root) {
    const std::string key = kv.first.as<std::string>();
    if (!kKnownKeys.count(key)) {
      throw Error(Errc::DomainViolation, "unknown DSE key: " + key);
    }
  }
  if (root["backend_strategy"] && root["vivado_strategy"]) {
    throw Error(Errc::DomainViolation,
                "backend_strategy and vivado_strategy are aliases; give only one");
  }

  if (root["clock_period_ns"])
    spec.clock_period_ns = as_list<double>(root["clock_period_ns"], "clock_period_ns");
  if (root["enable_pipeline"])
    spec.enable_pipeline = as_list<bool>(root["enable_pipeline"], "enable_pipeline");
  if (root["pipeline_ii"]) spec.pipeline_ii = as_list<int>(root["pipeline_ii"], "pipeline_ii");
  if (root["enable_dataflow"])
    spec.enable_dataflow = as_list<bool>(root["enable_dataflow"], "enable_dataflow");
  if (root["unroll_factor"])
    spec.unroll_factor = as_list<int>(root["unroll_factor"], "unroll_factor");
  if (root["array_partition_factor"])
    spec.array_partition_factor =
        as_list<int>(root["array_partition_factor"], "array_partition_factor");
  if (root["allocation_limit_add"])
    spec.allocation_limit_add =
        as_list<int>(root["allocation_limit_add"], "allocation_limit_add");
  if (root["dsp_full_reg"])
    spec.dsp_full_reg = as_list<bool>(root["dsp_full_reg"], "dsp_full_reg");

  const YAML::Node strategy =
      root["backend_strategy"] ? root["backend_strategy"] : root["vivado_strategy"];
  if (strategy) {
    spec.backend_strategy.clear();
    for (const std::string& name : as_list<std::string>(strategy, "backend_strategy")) {
      spec.backend_strategy.push_back(parse_backend_strategy(name));
    }
  }

  spec.validate();
  return spec;
}

ExplorationPolicy parse_policy_block(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw Error(Errc::YamlSyntax, e.what());
  }
  ExplorationPolicy policy;
  if (!root.IsMap() || !root["policy"]) return policy;
  const YAML::Node p = root["policy"];
  try {
    if (p["mode"]) policy.mode = parse_policy_mode(p["mode"].as<std::string>());
    if (p["max_points"]) policy.max_points = p["max_points"].as<int>();
    if (p["seed"]) policy.seed = p["seed"].as<std::uint64_t>();
    if (p["prune_dependent"]) policy.prune_dependent = p["prune_dependent"].as<bool>();
  } catch (const YAML::Exception& e) {
    throw Error(Errc::DomainViolation, std::string("policy: ") + e.what());
  }
  policy.validate();
  return policy;
}

namespace {

std::vector<DsePoint> enumerate_product(const DseSpec& spec) {
  std::vector<DsePoint> points;
  points.reserve(spec.product_size());
  for (double clk : spec.clock_period_ns)
    for (bool pipe : spec.enable_pipeline)
      for (int ii : spec.pipeline_ii)
        for (bool df : spec.enable_dataflow)
          for (int unroll : spec.unroll_factor)
            for (int part : spec.array_partition_factor)
              for (int alloc : spec.allocation_limit_add)
                for (bool dspreg : spec.dsp_full_reg)
                  for (BackendStrategy strat : spec.backend_strategy) {
                    DsePoint p;
                    p.clock_period_ns = clk;
                    p.enable_pipeline = pipe;
                    p.pipeline_ii = ii;
                    p.enable_dataflow = df;
                    p.unroll_factor = unroll;
                    p.array_partition_factor = part;
                    p.allocation_limit_add = alloc;
                    p.dsp_full_reg = dspreg;
                    p.backend_strategy = strat;
                    points.push_back(p);
                  }
  return points;
}

// Fisher-Yates with explicit modulo draws; std::shuffle's distribution is
// implementation-defined and would break cross-platform reproducibility.
void deterministic_shuffle(std::vector<std::size_t>& idx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = idx.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(idx[i - 1], idx[j]);
  }
}

}  // namespace

std::vector<DsePoint> expand(const DseSpec& spec, const ExplorationPolicy& policy) {
  spec.validate();
  policy.validate();

  std::vector<DsePoint> points = enumerate_product(spec);
  if (policy.prune_dependent) {
    std::vector<DsePoint> pruned;
    pruned.reserve(points.size());
    std::unordered_set<std::string> seen;
    for (const DsePoint& p : points) {
      DsePoint n = p.normalized();
      if (seen.insert(n.point_id()).second) pruned.push_back(n);
    }
    points = std::move(pruned);
  }

  switch (policy.mode) {
    case PolicyMode::Exhaustive:
      break;
    case PolicyMode::Capped: {
      const std::size_t cap = static_cast<std::size_t>(*policy.max_points);
      if (points.size() > cap) points.resize(cap);
      break;
    }
    case PolicyMode::Random: {
      std::vector<std::size_t> idx(points.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      deterministic_shuffle(idx, *policy.seed);
      std::size_t take = points.size();
      if (policy.max_points) take = std::min(take, static_cast<std::size_t>(*policy.max_points));
      idx.resize(take);
      std::sort(idx.begin(), idx.end());  // sampled subset keeps expansion order
      std::vector<DsePoint> sampled;
      sampled.reserve(take);
      for (std::size_t i : idx) sampled.push_back(points[i]);
      points = std::move(sampled);
      break;
    }
  }
  return points;
}

const char* directive_kind_name(DirectiveKind k) {
  switch (k) {
    case DirectiveKind::Clock: return "clock";
    case DirectiveKind::Pipeline: return "pipeline";
    case DirectiveKind::Dataflow: return "dataflow";
    case DirectiveKind::Unroll: return "unroll";
    case DirectiveKind::ArrayPartition: return "array_partition";
    case DirectiveKind::AllocationLimit: return "allocation_limit";
    case DirectiveKind::DspReg: return "dsp_reg";
    case DirectiveKind::BackendStrategy: return "backend_strategy";
  }
  return "unknown";
}

DirectiveSet render_directives(const DsePoint& point) {
  DirectiveSet out;
  out.push_back({DirectiveKind::Clock, {{"period_ns", format_double(point.clock_period_ns)}}});
  if (point.enable_pipeline) {
    out.push_back({DirectiveKind::Pipeline, {{"ii", std::to_string(point.pipeline_ii)}}});
  }
  if (point.enable_dataflow) {
    out.push_back({DirectiveKind::Dataflow, {}});
  }
  if (point.unroll_factor != 1) {
    out.push_back({DirectiveKind::Unroll, {{"factor", std::to_string(point.unroll_factor)}}});
  }
  if (point.array_partition_factor != 1) {
    out.push_back({DirectiveKind::ArrayPartition,
                   {{"factor", std::to_string(point.array_partition_factor)}}});
  }
  if (point.allocation_limit_add != 0) {
    out.push_back({DirectiveKind::AllocationLimit,
                   {{"limit", std::to_string(point.allocation_limit_add)}, {"op", "add"}}});
  }
  if (point.dsp_full_reg) {
    out.push_back({DirectiveKind::DspReg, {}});
  }
  if (point.backend_strategy != BackendStrategy::Default) {
    out.push_back({DirectiveKind::BackendStrategy,
                   {{"strategy", backend_strategy_name(point.backend_strategy)}}});
  }
  return out;
}

}  // namespace hlsbench
