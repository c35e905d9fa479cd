#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "hlsbench/corpus.hpp"
#include "hlsbench/dse.hpp"
#include "hlsbench/engine.hpp"
#include "hlsbench/errors.hpp"
#include "hlsbench/gateway.hpp"
#include "hlsbench/prompts.hpp"
#include "hlsbench/report_emit.hpp"
#include "hlsbench/reports.hpp"
#include "hlsbench/run_config.hpp"
#include "hlsbench/util.hpp"

namespace hb = hlsbench;

namespace {

int exit_code_for(const hb::Error& e) {
  switch (e.code()) {
    case hb::Errc::IoError:
    case hb::Errc::UnknownRun:
    case hb::Errc::ConfigError:
    case hb::Errc::YamlSyntax:
    case hb::Errc::ManifestVersion:
      return 2;
    default:
      return 1;
  }
}

struct CliOptions {
  std::string config_path;
  std::string corpus;
  std::string adapter;
  std::string adapter_config;
  std::string model;
  std::string backend;
  std::string command;
  std::string cache_dir;
  std::string endpoint_url;
  std::string api_key_env;
  int k = 0;
  int jobs = 0;
  std::string part;
  std::string policy_mode;
  std::uint64_t seed = 0;
  int max_points = 0;
  bool no_prune = false;
  std::string out;
  std::string dse_defaults;
  std::string run_id;
  double temperature = -1.0;
  int throttle_ms = -1;
  double timeout_compile = -1, timeout_csim = -1, timeout_synth = -1, timeout_impl = -1;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "hlsbench.yaml config file");
  cmd->add_option("--corpus", opt.corpus, "corpus directory");
  cmd->add_option("--adapter", opt.adapter, "toolchain adapter (mock|vitis|catapult)");
  cmd->add_option("--adapter-config", opt.adapter_config, "adapter config yaml");
  cmd->add_option("--model", opt.model, "model id under test");
  cmd->add_option("--backend", opt.backend,
                  "model backend (replay_cache|http_api|local_command)");
  cmd->add_option("--command", opt.command, "local_command backend executable");
  cmd->add_option("--cache-dir", opt.cache_dir, "response cache directory");
  cmd->add_option("--endpoint-url", opt.endpoint_url, "http_api endpoint URL");
  cmd->add_option("--api-key-env", opt.api_key_env, "env var holding the API credential");
  cmd->add_option("--k", opt.k, "candidates per task");
  cmd->add_option("--jobs", opt.jobs, "parallel workers");
  cmd->add_option("--part", opt.part, "target FPGA part");
  cmd->add_option("--policy", opt.policy_mode, "DSE policy (exhaustive|capped|random)");
  cmd->add_option("--seed", opt.seed, "seed for the random policy");
  cmd->add_option("--max-points", opt.max_points, "point cap for capped/random policies");
  cmd->add_flag("--no-prune", opt.no_prune, "keep dependent-parameter duplicates");
  cmd->add_option("--out", opt.out, "output directory");
  cmd->add_option("--dse-defaults", opt.dse_defaults, "default DSE spec yaml");
  cmd->add_option("--run-id", opt.run_id, "run id (generated when omitted)");
  cmd->add_option("--temperature", opt.temperature, "sampling temperature");
  cmd->add_option("--throttle-ms", opt.throttle_ms,
                  "debug: per-unit delay in milliseconds");
  cmd->add_option("--timeout-compile", opt.timeout_compile, "compile timeout (s)");
  cmd->add_option("--timeout-csim", opt.timeout_csim, "csim timeout (s)");
  cmd->add_option("--timeout-synth", opt.timeout_synth, "synthesis timeout (s)");
  cmd->add_option("--timeout-impl", opt.timeout_impl, "implementation timeout (s)");
}

hb::RunConfig resolve_config(const CLI::App* cmd, const CliOptions& opt) {
  hb::RunConfig cfg;
  if (!opt.config_path.empty()) {
    cfg = hb::load_run_config(opt.config_path);
  } else if (hb::fs::exists("hlsbench.yaml")) {
    cfg = hb::load_run_config("hlsbench.yaml");
  }

  auto given = [&](const std::string& flag) { return cmd->count(flag) > 0; };
  if (given("--corpus")) cfg.corpus_path = opt.corpus;
  if (given("--adapter")) cfg.adapter_name = opt.adapter;
  if (given("--adapter-config")) cfg.adapter_config_path = hb::fs::path(opt.adapter_config);
  if (given("--model")) cfg.model_id = opt.model;
  if (given("--backend")) cfg.backend = opt.backend;
  if (given("--command")) cfg.api_params["command"] = opt.command;
  if (given("--cache-dir")) cfg.api_params["cache_dir"] = opt.cache_dir;
  if (given("--endpoint-url")) cfg.api_params["endpoint_url"] = opt.endpoint_url;
  if (given("--api-key-env")) cfg.api_params["api_key_env"] = opt.api_key_env;
  if (given("--k")) cfg.k = opt.k;
  if (given("--jobs")) cfg.jobs = opt.jobs;
  if (given("--part")) cfg.target_part = opt.part;
  if (given("--policy")) cfg.policy.mode = hb::parse_policy_mode(opt.policy_mode);
  if (given("--seed")) cfg.policy.seed = opt.seed;
  if (given("--max-points")) cfg.policy.max_points = opt.max_points;
  if (given("--no-prune")) cfg.policy.prune_dependent = false;
  if (given("--policy") || given("--seed") || given("--max-points") || given("--no-prune")) {
    cfg.policy_explicit = true;
  }
  if (given("--out")) cfg.output_dir = opt.out;
  if (given("--dse-defaults")) cfg.dse_defaults_path = hb::fs::path(opt.dse_defaults);
  if (given("--run-id")) cfg.run_id = opt.run_id;
  if (given("--temperature")) cfg.temperature = opt.temperature;
  if (given("--throttle-ms")) cfg.throttle_ms = opt.throttle_ms;
  if (given("--timeout-compile")) cfg.timeouts.compile_s = opt.timeout_compile;
  if (given("--timeout-csim")) cfg.timeouts.csim_s = opt.timeout_csim;
  if (given("--timeout-synth")) cfg.timeouts.synth_s = opt.timeout_synth;
  if (given("--timeout-impl")) cfg.timeouts.impl_s = opt.timeout_impl;
  return cfg;
}

const char* severity_name(hb::Severity s) {
  return s == hb::Severity::Error ? "error" : "warning";
}

int cmd_corpus_validate(const hb::RunConfig& cfg) {
  hb::Corpus corpus;
  nlohmann::json findings_json = nlohmann::json::array();
  int error_count = 0;
  try {
    corpus = hb::load_corpus(cfg.corpus_path);
  } catch (const hb::Error& e) {
    if (e.code() == hb::Errc::IoError) throw;  // bad path: exit 2
    std::cout << "error " << e.what() << "\n";
    findings_json.push_back({{"severity", "error"}, {"code", hb::errc_name(e.code())},
                             {"message", e.what()}});
    hb::write_file(cfg.output_dir / "findings.json", findings_json.dump(2) + "\n");
    return 1;
  }

  for (const hb::BenchmarkTask& task : corpus.tasks) {
    for (const hb::Finding& f : hb::validate_task(task)) {
      std::cout << severity_name(f.severity) << " " << f.code << " " << f.message << "\n";
      findings_json.push_back({{"severity", severity_name(f.severity)},
                               {"code", f.code},
                               {"message", f.message},
                               {"task_id", task.id}});
      if (f.severity == hb::Severity::Error) ++error_count;
    }
  }
  hb::write_file(cfg.output_dir / "findings.json", findings_json.dump(2) + "\n");
  std::cout << corpus.tasks.size() << " tasks, " << findings_json.size() << " findings, "
            << error_count << " errors\n";
  return error_count == 0 ? 0 : 1;
}

int cmd_generate(const hb::RunConfig& cfg) {
  hb::Corpus corpus = hb::load_corpus(cfg.corpus_path);
  hb::ModelConfig model = hb::model_config_from(cfg);

  int failed_tasks = 0;
  std::map<std::string, int> status_counts;
  for (const hb::BenchmarkTask& task : corpus.tasks) {
    try {
      std::vector<hb::Candidate> candidates = hb::sample_candidates(task, model, cfg.k);
      for (const hb::Candidate& cand : candidates) {
        hb::fs::path dir = cfg.output_dir / "candidates" / task.id;
        nlohmann::json meta{{"task_id", cand.task_id},
                            {"sample_index", cand.sample_index},
                            {"extraction_status",
                             hb::extraction_status_name(cand.extraction_status)},
                            {"model_id", model.model_id},
                            {"temperature", model.temperature},
                            {"raw_response", cand.raw_response}};
        hb::write_file(dir / ("sample_" + std::to_string(cand.sample_index) + ".json"),
                       meta.dump(2) + "\n");
        if (cand.source) {
          hb::write_file(dir / ("sample_" + std::to_string(cand.sample_index) + ".cpp"),
                         *cand.source);
        }
        ++status_counts[hb::extraction_status_name(cand.extraction_status)];
      }
    } catch (const hb::Error& e) {
      if (e.code() == hb::Errc::BackendUnavailable || e.code() == hb::Errc::CacheMiss) {
        std::cout << task.id << ": generation failed: " << e.what() << "\n";
        ++failed_tasks;
      } else {
        throw;
      }
    }
  }
  std::cout << "extraction status summary:";
  for (const auto& [status, count] : status_counts) std::cout << " " << status << "=" << count;
  std::cout << "\n";
  if (failed_tasks > 0) {
    std::cout << failed_tasks << " task(s) failed generation\n";
    return 1;
  }
  return 0;
}

int cmd_evaluate(const hb::RunConfig& cfg, const std::string& resume_id) {
  hb::RunReport report;
  if (!resume_id.empty()) {
    report = hb::resume_run(cfg.output_dir, resume_id);
  } else {
    hb::Corpus corpus = hb::load_corpus(cfg.corpus_path);
    hb::ModelConfig model = hb::model_config_from(cfg);
    hb::DseSpec defaults = hb::dse_defaults_from(cfg);
    std::unique_ptr<hb::Adapter> adapter = hb::make_adapter(hb::adapter_config_from(cfg));
    report = hb::run_benchmark(corpus, model, defaults, hb::policy_from(cfg), *adapter,
                               cfg.k, hb::engine_config_from(cfg));
  }
  std::cout << hb::compare_runs_text({report});
  std::cout << "records: " << report.records.size() << ", skips: " << report.skips.size()
            << "\n";
  std::cout << "run dir: " << hb::run_dir(cfg.output_dir, report.run_id).string() << "\n";
  return 0;
}

int cmd_dse_expand(const hb::RunConfig& cfg, const std::string& spec_path, bool count_only) {
  std::string yaml_text = hb::read_file(spec_path);
  hb::DseSpec spec = hb::parse_dse_spec(yaml_text);

  // the file's own policy block applies unless flags picked another policy
  hb::ExplorationPolicy policy =
      cfg.policy_explicit ? cfg.policy : hb::parse_policy_block(yaml_text);

  std::vector<hb::DsePoint> points = hb::expand(spec, policy);
  std::cout << points.size() << " points\n";
  if (!count_only) {
    for (const hb::DsePoint& p : points) {
      nlohmann::json j = p;
      std::cout << j.dump() << "\n";
    }
  }
  return 0;
}

int cmd_report(const hb::RunConfig& cfg, const std::vector<std::string>& run_ids,
               const std::string& format, bool plots, const std::string& out_override) {
  std::vector<hb::RunReport> reports;
  reports.reserve(run_ids.size());
  for (const std::string& id : run_ids) {
    reports.push_back(hb::load_run_report(cfg.output_dir, id));
  }

  hb::EmitFormat fmt = format == "json" ? hb::EmitFormat::Json : hb::EmitFormat::Csv;
  for (const hb::RunReport& report : reports) {
    hb::fs::path dir = out_override.empty()
                           ? hb::run_dir(cfg.output_dir, report.run_id) / "report"
                           : hb::fs::path(out_override) / report.run_id;
    for (const hb::fs::path& p : hb::emit_report_files(report, dir, fmt, plots)) {
      std::cout << "wrote " << p.string() << "\n";
    }
  }
  std::cout << hb::compare_runs_text(reports);
  return 0;
}

int cmd_parse_report(const std::string& format, const std::string& synth_path,
                     const std::string& timing_path, const std::string& power_path,
                     const std::string& util_path) {
  hb::ReportFormat fmt = hb::parse_report_format(format);
  hb::PpaRecord synth;
  if (!synth_path.empty()) {
    synth = hb::parse_hls_synth_report(hb::read_file(synth_path), fmt);
  }
  hb::PpaRecord impl;
  if (!timing_path.empty() || !power_path.empty()) {
    impl = hb::parse_impl_report(
        timing_path.empty() ? "" : hb::read_file(timing_path),
        power_path.empty() ? "" : hb::read_file(power_path),
        util_path.empty() ? "" : hb::read_file(util_path), fmt);
  }
  nlohmann::json j = synth_path.empty() ? nlohmann::json(impl)
                                        : nlohmann::json(hb::merge_ppa(synth, impl));
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluation harness for machine-generated HLS designs"};
  app.require_subcommand(1);

  CliOptions opt;

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "corpus operations");
  corpus_cmd->require_subcommand(1);
  CLI::App* validate_cmd = corpus_cmd->add_subcommand("validate", "validate a corpus");
  add_common_flags(validate_cmd, opt);

  CLI::App* generate_cmd =
      app.add_subcommand("generate", "sample candidates for every task");
  add_common_flags(generate_cmd, opt);

  CLI::App* evaluate_cmd =
      app.add_subcommand("evaluate", "run the full gated evaluation pipeline");
  add_common_flags(evaluate_cmd, opt);
  std::string resume_id;
  evaluate_cmd->add_option("--resume", resume_id, "resume a persisted run id");

  CLI::App* dse_cmd = app.add_subcommand("dse", "design-space operations");
  dse_cmd->require_subcommand(1);
  CLI::App* expand_cmd = dse_cmd->add_subcommand("expand", "expand a DSE spec");
  add_common_flags(expand_cmd, opt);
  std::string spec_path;
  bool count_only = false;
  expand_cmd->add_option("--spec", spec_path, "DSE yaml file")->required();
  expand_cmd->add_flag("--count-only", count_only, "print only the point count");

  CLI::App* report_cmd = app.add_subcommand("report", "emit metric tables for runs");
  add_common_flags(report_cmd, opt);
  std::vector<std::string> run_ids;
  std::string format = "csv";
  bool plots = false;
  std::string report_out;
  report_cmd->add_option("run_ids", run_ids, "run id(s) to report")->required();
  report_cmd->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  report_cmd->add_flag("--plots", plots, "emit per-figure plot CSVs");
  report_cmd->add_option("--report-out", report_out, "directory for emitted tables");

  CLI::App* parse_cmd = app.add_subcommand("parse-report", "parse tool reports to JSON");
  std::string pr_format = "generic_kv", pr_synth, pr_timing, pr_power, pr_util;
  parse_cmd->add_option("--format", pr_format, "vitis_xml|generic_kv");
  parse_cmd->add_option("--synth", pr_synth, "synthesis report file");
  parse_cmd->add_option("--timing", pr_timing, "implementation timing report");
  parse_cmd->add_option("--power", pr_power, "implementation power report");
  parse_cmd->add_option("--util", pr_util, "implementation utilization report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      return cmd_corpus_validate(resolve_config(validate_cmd, opt));
    }
    if (generate_cmd->parsed()) {
      return cmd_generate(resolve_config(generate_cmd, opt));
    }
    if (evaluate_cmd->parsed()) {
      return cmd_evaluate(resolve_config(evaluate_cmd, opt), resume_id);
    }
    if (expand_cmd->parsed()) {
      return cmd_dse_expand(resolve_config(expand_cmd, opt), spec_path, count_only);
    }
    if (report_cmd->parsed()) {
      return cmd_report(resolve_config(report_cmd, opt), run_ids, format, plots, report_out);
    }
    if (parse_cmd->parsed()) {
      return cmd_parse_report(pr_format, pr_synth, pr_timing, pr_power, pr_util);
    }
  } catch (const hb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
