#include "hlsbench/run_config.hpp"

#include <yaml-cpp/yaml.h>

#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

RunConfig load_run_config(const fs::path& yaml_path) {
  RunConfig cfg;
  YAML::Node node;
  try {
    node = YAML::Load(read_file(yaml_path));
  } catch (const YAML::Exception& e) {
    throw Error(Errc::YamlSyntax, yaml_path.string() + ": " + e.what());
  }
  try {
    if (node["corpus"]) cfg.corpus_path = node["corpus"].as<std::string>();
    if (node["adapter"]) cfg.adapter_name = node["adapter"].as<std::string>();
    if (node["adapter_config"]) {
      cfg.adapter_config_path = fs::path(node["adapter_config"].as<std::string>());
    }
    if (node["model"]) cfg.model_id = node["model"].as<std::string>();
    if (node["backend"]) cfg.backend = node["backend"].as<std::string>();
    if (node["temperature"]) cfg.temperature = node["temperature"].as<double>();
    if (node["max_tokens"]) cfg.max_tokens = node["max_tokens"].as<int>();
    if (node["cache_dir"]) cfg.api_params["cache_dir"] = node["cache_dir"].as<std::string>();
    if (node["command"]) cfg.api_params["command"] = node["command"].as<std::string>();
    if (node["endpoint_url"]) {
      cfg.api_params["endpoint_url"] = node["endpoint_url"].as<std::string>();
    }
    if (node["api_key_env"]) {
      cfg.api_params["api_key_env"] = node["api_key_env"].as<std::string>();
    }
    if (node["k"]) cfg.k = node["k"].as<int>();
    if (node["jobs"]) cfg.jobs = node["jobs"].as<int>();
    if (node["part"]) cfg.target_part = node["part"].as<std::string>();
    if (node["out"]) cfg.output_dir = node["out"].as<std::string>();
    if (node["dse_defaults"]) {
      cfg.dse_defaults_path = fs::path(node["dse_defaults"].as<std::string>());
    }
    if (node["run_id"]) cfg.run_id = node["run_id"].as<std::string>();
    if (node["evaluate_reference"]) {
      cfg.evaluate_reference = node["evaluate_reference"].as<bool>();
    }
    if (node["policy"]) {
      const YAML::Node p = node["policy"];
      if (p["mode"]) cfg.policy.mode = parse_policy_mode(p["mode"].as<std::string>());
      if (p["max_points"]) cfg.policy.max_points = p["max_points"].as<int>();
      if (p["seed"]) cfg.policy.seed = p["seed"].as<std::uint64_t>();
      if (p["prune_dependent"]) cfg.policy.prune_dependent = p["prune_dependent"].as<bool>();
      cfg.policy_explicit = true;
    }
    if (node["timeouts"]) {
      const YAML::Node t = node["timeouts"];
      if (t["compile_s"]) cfg.timeouts.compile_s = t["compile_s"].as<double>();
      if (t["csim_s"]) cfg.timeouts.csim_s = t["csim_s"].as<double>();
      if (t["synth_s"]) cfg.timeouts.synth_s = t["synth_s"].as<double>();
      if (t["impl_s"]) cfg.timeouts.impl_s = t["impl_s"].as<double>();
    }
  } catch (const YAML::Exception& e) {
    throw Error(Errc::ConfigError, yaml_path.string() + ": " + e.what());
  }
  return cfg;
}

double effective_temperature(const RunConfig& cfg) {
  if (cfg.temperature) return *cfg.temperature;
  return cfg.k > 1 ? 0.8 : 0.0;
}

ModelConfig model_config_from(const RunConfig& cfg) {
  ModelConfig m;
  m.model_id = cfg.model_id;
  m.endpoint_kind = parse_endpoint_kind(cfg.backend);
  m.temperature = effective_temperature(cfg);
  m.max_tokens = cfg.max_tokens;
  m.api_params = cfg.api_params;
  if (!m.api_params.count("cache_dir")) {
    m.api_params["cache_dir"] = (cfg.output_dir / "cache").string();
  }
  return m;
}

AdapterConfig adapter_config_from(const RunConfig& cfg) {
  AdapterConfig a;
  if (cfg.adapter_config_path) {
    a = load_adapter_config(*cfg.adapter_config_path);
    if (!cfg.adapter_name.empty()) a.name = cfg.adapter_name;
  } else {
    a.name = cfg.adapter_name;
  }
  a.default_part = cfg.target_part;
  return a;
}

EngineConfig engine_config_from(const RunConfig& cfg) {
  EngineConfig e;
  e.output_dir = cfg.output_dir;
  e.run_id = cfg.run_id;
  e.jobs = cfg.jobs;
  e.throttle_ms = cfg.throttle_ms;
  e.target_part = cfg.target_part;
  e.timeouts = cfg.timeouts;
  e.evaluate_reference = cfg.evaluate_reference;
  e.adapter_config = adapter_config_from(cfg);
  return e;
}

DseSpec dse_defaults_from(const RunConfig& cfg) {
  if (cfg.dse_defaults_path) {
    return parse_dse_spec(read_file(*cfg.dse_defaults_path));
  }
  return DseSpec{};
}

ExplorationPolicy policy_from(const RunConfig& cfg) {
  if (cfg.policy_explicit || !cfg.dse_defaults_path) return cfg.policy;
  return parse_policy_block(read_file(*cfg.dse_defaults_path));
}

}  // namespace hlsbench
