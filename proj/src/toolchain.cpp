#include "hlsbench/toolchain.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

const char* stage_name(StageId s) {
  switch (s) {
    case StageId::Compile: return "compile";
    case StageId::CSim: return "csim";
    case StageId::Synth: return "synth";
    case StageId::Impl: return "impl";
  }
  return "compile";
}

StageId parse_stage(const std::string& s) {
  if (s == "compile") return StageId::Compile;
  if (s == "csim") return StageId::CSim;
  if (s == "synth") return StageId::Synth;
  if (s == "impl") return StageId::Impl;
  throw Error(Errc::DomainViolation, "unknown stage: " + s);
}

int stage_rank(StageId s) { return static_cast<int>(s); }

const char* stage_status_name(StageStatus s) {
  switch (s) {
    case StageStatus::Pass: return "pass";
    case StageStatus::Fail: return "fail";
    case StageStatus::Timeout: return "timeout";
    case StageStatus::ToolError: return "tool_error";
    case StageStatus::NotRun: return "not_run";
  }
  return "not_run";
}

StageStatus parse_stage_status(const std::string& s) {
  if (s == "pass") return StageStatus::Pass;
  if (s == "fail") return StageStatus::Fail;
  if (s == "timeout") return StageStatus::Timeout;
  if (s == "tool_error") return StageStatus::ToolError;
  if (s == "not_run") return StageStatus::NotRun;
  throw Error(Errc::DomainViolation, "unknown stage status: " + s);
}

double StageTimeouts::for_stage(StageId s) const {
  switch (s) {
    case StageId::Compile: return compile_s;
    case StageId::CSim: return csim_s;
    case StageId::Synth: return synth_s;
    case StageId::Impl: return impl_s;
  }
  return compile_s;
}

AdapterConfig load_adapter_config(const fs::path& yaml_path) {
  AdapterConfig cfg;
  YAML::Node node;
  try {
    node = YAML::Load(read_file(yaml_path));
  } catch (const YAML::Exception& e) {
    throw Error(Errc::YamlSyntax, yaml_path.string() + ": " + e.what());
  }
  try {
    if (node["name"]) cfg.name = node["name"].as<std::string>();
    if (node["tool_binary"]) cfg.tool_binary = node["tool_binary"].as<std::string>();
    if (node["backend_binary"]) cfg.backend_binary = node["backend_binary"].as<std::string>();
    if (node["script_template"]) cfg.script_template = node["script_template"].as<std::string>();
    if (node["default_part"]) cfg.default_part = node["default_part"].as<std::string>();
  } catch (const YAML::Exception& e) {
    throw Error(Errc::ConfigError, yaml_path.string() + ": " + e.what());
  }
  return cfg;
}

void to_json(nlohmann::json& j, const AdapterConfig& cfg) {
  j = nlohmann::json{{"name", cfg.name}, {"default_part", cfg.default_part}};
  if (cfg.tool_binary) j["tool_binary"] = cfg.tool_binary->string();
  if (cfg.backend_binary) j["backend_binary"] = cfg.backend_binary->string();
  if (cfg.script_template) j["script_template"] = cfg.script_template->string();
}

void from_json(const nlohmann::json& j, AdapterConfig& cfg) {
  cfg = AdapterConfig{};
  if (j.contains("name")) cfg.name = j["name"].get<std::string>();
  if (j.contains("default_part")) cfg.default_part = j["default_part"].get<std::string>();
  if (j.contains("tool_binary")) cfg.tool_binary = fs::path(j["tool_binary"].get<std::string>());
  if (j.contains("backend_binary")) {
    cfg.backend_binary = fs::path(j["backend_binary"].get<std::string>());
  }
  if (j.contains("script_template")) {
    cfg.script_template = fs::path(j["script_template"].get<std::string>());
  }
}

void to_json(nlohmann::json& j, const StageTimeouts& t) {
  j = nlohmann::json{{"compile_s", t.compile_s},
                     {"csim_s", t.csim_s},
                     {"synth_s", t.synth_s},
                     {"impl_s", t.impl_s}};
}

void from_json(const nlohmann::json& j, StageTimeouts& t) {
  t = StageTimeouts{};
  if (j.contains("compile_s")) t.compile_s = j["compile_s"].get<double>();
  if (j.contains("csim_s")) t.csim_s = j["csim_s"].get<double>();
  if (j.contains("synth_s")) t.synth_s = j["synth_s"].get<double>();
  if (j.contains("impl_s")) t.impl_s = j["impl_s"].get<double>();
}

Workspace prepare_workspace(const Adapter& adapter, const BenchmarkTask& task,
                            const Candidate& candidate, const DsePoint& point,
                            const fs::path& workspace_dir, const std::string& target_part) {
  if (candidate.extraction_status != ExtractionStatus::Ok || !candidate.source) {
    throw Error(Errc::InvalidCandidate,
                task.id + " sample " + std::to_string(candidate.sample_index) + ": extraction " +
                    extraction_status_name(candidate.extraction_status));
  }
  if (target_part.empty()) throw Error(Errc::ConfigError, "target_part must be non-empty");

  std::error_code ec;
  fs::remove_all(workspace_dir, ec);
  fs::create_directories(workspace_dir);

  Workspace ws;
  ws.dir = workspace_dir;
  ws.target_part = target_part;
  ws.clock_period_ns = point.clock_period_ns;

  write_file(workspace_dir / "design.cpp", *candidate.source);
  write_file(workspace_dir / "testbench.cpp", task.testbench_source);
  ws.sources = {workspace_dir / "design.cpp", workspace_dir / "testbench.cpp"};

  nlohmann::json pj = point;
  nlohmann::json dir_json = nlohmann::json::array();
  for (const Directive& d : render_directives(point)) {
    dir_json.push_back({{"kind", directive_kind_name(d.kind)}, {"args", d.args}});
  }
  nlohmann::json meta{{"task_id", task.id},
                      {"sample_index", candidate.sample_index},
                      {"top_function", task.top_function},
                      {"target_part", target_part},
                      {"point", pj},
                      {"directives", dir_json}};
  write_file(workspace_dir / "point.json", meta.dump(2) + "\n");

  adapter.render_scripts(ws, task, point);

  for (const auto& entry : fs::directory_iterator(workspace_dir)) {
    const auto ext = entry.path().extension();
    if (ext == ".tcl" || ext == ".sh" || ext == ".yaml") ws.scripts.push_back(entry.path());
  }
  std::sort(ws.scripts.begin(), ws.scripts.end());
  return ws;
}

std::optional<StageStatus> read_stage_status(const Workspace& ws, StageId stage) {
  auto text = read_file_if_exists(ws.dir / (std::string(stage_name(stage)) + ".status"));
  if (!text) return std::nullopt;
  return parse_stage_status(trim(*text));
}

StageRecord run_stage(const Adapter& adapter, const Workspace& ws, StageId stage,
                      double timeout_s) {
  for (StageId earlier : kStageOrder) {
    if (stage_rank(earlier) >= stage_rank(stage)) break;
    auto status = read_stage_status(ws, earlier);
    if (!status || *status != StageStatus::Pass) {
      throw Error(Errc::StageOrder, std::string(stage_name(stage)) + " requested but " +
                                        stage_name(earlier) + " has not passed in " +
                                        ws.dir.string());
    }
  }

  const auto supports = adapter.descriptor().supports;
  StageRecord record;
  if (!supports.count(stage)) {
    record.stage = stage;
    record.status = StageStatus::NotRun;
    return record;
  }

  record = adapter.execute(ws, stage, timeout_s);
  write_file(ws.dir / (std::string(stage_name(stage)) + ".status"),
             std::string(stage_status_name(record.status)) + "\n");
  return record;
}

// ---- mock cost model ----

namespace {

MockProfile profile_from_node(const YAML::Node& node) {
  MockProfile p;
  if (!node || node.IsNull()) return p;
  try {
    if (node["base_cycles"]) p.base_cycles = node["base_cycles"].as<long>();
    if (node["base_lut"]) p.base_lut = node["base_lut"].as<long>();
    if (node["base_ff"]) p.base_ff = node["base_ff"].as<long>();
    if (node["base_dsp"]) p.base_dsp = node["base_dsp"].as<long>();
    if (node["base_bram"]) p.base_bram = node["base_bram"].as<long>();
    if (node["base_power_mw"]) p.base_power_mw = node["base_power_mw"].as<double>();
    if (node["min_period_ns"]) p.min_period_ns = node["min_period_ns"].as<double>();
    if (node["fail_at"]) p.fail_at = parse_stage(node["fail_at"].as<std::string>());
  } catch (const YAML::Exception& e) {
    throw Error(Errc::ConfigError, std::string("mock profile: ") + e.what());
  }
  return p;
}

}  // namespace

MockProfile mock_profile_from_yaml(const std::string& yaml_text) {
  YAML::Node node;
  try {
    node = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw Error(Errc::YamlSyntax, std::string("mock profile: ") + e.what());
  }
  if (node["mock"]) return profile_from_node(node["mock"]);
  return profile_from_node(node);
}

std::string mock_profile_to_yaml(const MockProfile& p) {
  std::string out;
  out += "base_cycles: " + std::to_string(p.base_cycles) + "\n";
  out += "base_lut: " + std::to_string(p.base_lut) + "\n";
  out += "base_ff: " + std::to_string(p.base_ff) + "\n";
  out += "base_dsp: " + std::to_string(p.base_dsp) + "\n";
  out += "base_bram: " + std::to_string(p.base_bram) + "\n";
  out += "base_power_mw: " + format_double(p.base_power_mw) + "\n";
  out += "min_period_ns: " + format_double(p.min_period_ns) + "\n";
  if (p.fail_at) out += "fail_at: " + std::string(stage_name(*p.fail_at)) + "\n";
  return out;
}

MockProfile mock_profile_for_task(const BenchmarkTask& task) {
  if (!task.dir.empty()) {
    if (auto meta = read_file_if_exists(task.dir / "meta.yaml")) {
      return mock_profile_from_yaml(*meta);
    }
  }
  return MockProfile{};
}

MockProfile apply_mock_source_overrides(MockProfile profile, const std::string& source) {
  for (const std::string& raw : split_lines(source)) {
    std::string line = trim(raw);
    if (line.rfind("//", 0) != 0) continue;
    line = trim(line.substr(2));
    if (line.rfind("mock:", 0) != 0) continue;
    line = line.substr(5);

    std::istringstream pairs(line);
    std::string token;
    while (pairs >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      try {
        if (key == "base_cycles") profile.base_cycles = std::stol(value);
        else if (key == "base_lut") profile.base_lut = std::stol(value);
        else if (key == "base_ff") profile.base_ff = std::stol(value);
        else if (key == "base_dsp") profile.base_dsp = std::stol(value);
        else if (key == "base_bram") profile.base_bram = std::stol(value);
        else if (key == "base_power_mw") profile.base_power_mw = std::stod(value);
        else if (key == "min_period_ns") profile.min_period_ns = std::stod(value);
        else if (key == "fail_at") profile.fail_at = parse_stage(value);
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        throw Error(Errc::DomainViolation, "bad mock override " + token);
      }
    }
  }
  return profile;
}

std::pair<std::map<StageId, StageStatus>, PpaRecord> mock_evaluate(const MockProfile& profile,
                                                                   const DsePoint& point) {
  PpaRecord ppa;
  const long per_iter = point.enable_pipeline ? point.pipeline_ii : 2;
  const long iterations =
      (profile.base_cycles + point.unroll_factor - 1) / point.unroll_factor;
  ppa.latency_cycles = iterations * per_iter;
  ppa.clock_ns = point.clock_period_ns;
  ppa.latency_ns = static_cast<double>(*ppa.latency_cycles) * point.clock_period_ns;
  ppa.lut = profile.base_lut * point.unroll_factor * point.array_partition_factor;
  ppa.ff = profile.base_ff * point.unroll_factor;
  ppa.dsp = profile.base_dsp;
  ppa.bram = profile.base_bram;
  ppa.power_mw = profile.base_power_mw * (1.0 + 0.1 * (point.unroll_factor - 1));
  ppa.wns_ns = point.clock_period_ns - profile.min_period_ns;
  ppa.fmax_mhz = 1000.0 / profile.min_period_ns;
  ppa.power_source = "impl";

  std::map<StageId, StageStatus> statuses;
  bool failed = false;
  for (StageId stage : kStageOrder) {
    if (failed) {
      statuses[stage] = StageStatus::NotRun;
      continue;
    }
    bool fails_here = (profile.fail_at && *profile.fail_at == stage) ||
                      (stage == StageId::Impl && *ppa.wns_ns < 0);
    statuses[stage] = fails_here ? StageStatus::Fail : StageStatus::Pass;
    if (fails_here) failed = true;
  }
  return {statuses, ppa};
}

}  // namespace hlsbench
