#include "hlsbench/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

namespace {

constexpr int kSchemaVersion = 1;

std::string generate_run_id() {
  std::random_device rd;
  unsigned suffix = static_cast<unsigned>(rd()) % 0x10000u;
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%04x", suffix);
  std::string stamp = utc_timestamp();  // 2026-08-09T12:34:56Z
  std::string compact;
  for (char c : stamp) {
    if (std::isdigit(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  return "run-" + compact + "-" + buf;
}

std::string triple_key(const std::string& task_id, int sample_index,
                       const std::string& point_id) {
  return task_id + "\x1f" + std::to_string(sample_index) + "\x1f" + point_id;
}

fs::path relativize(const fs::path& p, const fs::path& root) {
  std::error_code ec;
  fs::path rel = fs::relative(p, root, ec);
  if (ec || rel.empty()) return p;
  return rel;
}

std::string sample_dir_name(int sample_index) {
  return sample_index < 0 ? std::string("ref") : "s" + std::to_string(sample_index);
}

struct WorkUnit {
  const BenchmarkTask* task = nullptr;
  Candidate candidate;
  DsePoint point;
};

std::optional<PpaRecord> assemble_ppa(const EvaluationRecord& rec, ReportFormat format) {
  auto synth_it = rec.stage_records.find(StageId::Synth);
  if (synth_it == rec.stage_records.end() || synth_it->second.status != StageStatus::Pass ||
      synth_it->second.report_paths.empty()) {
    return std::nullopt;
  }
  try {
    PpaRecord synth_part =
        parse_hls_synth_report(read_file(synth_it->second.report_paths.front()), format);

    PpaRecord impl_part;
    auto impl_it = rec.stage_records.find(StageId::Impl);
    if (impl_it != rec.stage_records.end() &&
        (impl_it->second.status == StageStatus::Pass ||
         impl_it->second.status == StageStatus::Fail) &&
        !impl_it->second.report_paths.empty()) {
      std::string timing, power, util;
      for (const fs::path& p : impl_it->second.report_paths) {
        const std::string name = p.filename().string();
        auto text = read_file_if_exists(p);
        if (!text) continue;
        if (name.find("timing") != std::string::npos) timing = *text;
        else if (name.find("power") != std::string::npos) power = *text;
        else if (name.find("util") != std::string::npos) util = *text;
      }
      if (!timing.empty() || !power.empty()) {
        impl_part = parse_impl_report(timing, power, util, format);
      }
    }
    return merge_ppa(synth_part, impl_part);
  } catch (const Error&) {
    // Unparseable tool output leaves the record without PPA; the raw
    // reports stay in the workspace for inspection.
    return std::nullopt;
  }
}

EvaluationRecord evaluate_one(const BenchmarkTask& task, const Candidate& candidate,
                              const DsePoint& point, const Adapter& adapter,
                              const fs::path& ws_dir, const StageTimeouts& timeouts,
                              const std::string& target_part) {
  EvaluationRecord rec;
  rec.task_id = task.id;
  rec.sample_index = candidate.sample_index;
  rec.point = point;

  Workspace ws = prepare_workspace(adapter, task, candidate, point, ws_dir, target_part);

  bool halted = false;
  for (StageId stage : kStageOrder) {
    if (halted) {
      StageRecord sr;
      sr.stage = stage;
      sr.status = StageStatus::NotRun;
      rec.stage_records.emplace(stage, sr);
      continue;
    }
    StageRecord sr = run_stage(adapter, ws, stage, timeouts.for_stage(stage));
    if (sr.status != StageStatus::Pass) halted = true;
    rec.stage_records.emplace(stage, sr);
  }

  rec.ppa = assemble_ppa(rec, adapter.report_format());
  return rec;
}

}  // namespace

fs::path run_dir(const fs::path& output_dir, const std::string& run_id) {
  return output_dir / "runs" / run_id;
}

std::vector<DsePoint> points_for_task(const BenchmarkTask& task, const DseSpec& dse_defaults,
                                      const ExplorationPolicy& policy) {
  DseSpec spec = dse_defaults;
  if (task.dse_spec_path) {
    spec = parse_dse_spec(read_file(*task.dse_spec_path));
  }
  std::vector<DsePoint> points = expand(spec, policy);

  const DsePoint baseline = baseline_point();
  const std::string baseline_id = baseline.point_id();
  bool present = std::any_of(points.begin(), points.end(), [&](const DsePoint& p) {
    return p.point_id() == baseline_id;
  });
  if (!present) points.insert(points.begin(), baseline);
  return points;
}

std::vector<EvaluationRecord> evaluate_candidate(const BenchmarkTask& task,
                                                 const Candidate& candidate,
                                                 const std::vector<DsePoint>& points,
                                                 const Adapter& adapter,
                                                 const fs::path& work_root,
                                                 const StageTimeouts& timeouts,
                                                 const std::string& target_part) {
  std::vector<EvaluationRecord> records;
  if (candidate.extraction_status != ExtractionStatus::Ok) return records;
  if (points.empty()) throw Error(Errc::DomainViolation, "points must be non-empty");

  records.reserve(points.size());
  for (const DsePoint& point : points) {
    fs::path ws_dir =
        work_root / task.id / sample_dir_name(candidate.sample_index) / point.point_id();
    records.push_back(
        evaluate_one(task, candidate, point, adapter, ws_dir, timeouts, target_part));
  }
  return records;
}

nlohmann::json record_to_json(const EvaluationRecord& record, const fs::path& run_root) {
  nlohmann::json stages = nlohmann::json::object();
  for (const auto& [stage, sr] : record.stage_records) {
    nlohmann::json s{{"status", stage_status_name(sr.status)}};
    if (sr.status != StageStatus::NotRun) {
      s["wall_time_s"] = sr.wall_time_s;
      if (!sr.log_path.empty()) s["log"] = relativize(sr.log_path, run_root).generic_string();
      nlohmann::json reports = nlohmann::json::array();
      for (const fs::path& p : sr.report_paths) {
        reports.push_back(relativize(p, run_root).generic_string());
      }
      if (!reports.empty()) s["reports"] = reports;
    }
    stages[stage_name(stage)] = s;
  }
  nlohmann::json j{{"schema", kSchemaVersion},
                   {"task_id", record.task_id},
                   {"sample_index", record.sample_index},
                   {"point", record.point},
                   {"stages", stages}};
  if (record.ppa) j["ppa"] = *record.ppa;
  return j;
}

EvaluationRecord record_from_json(const nlohmann::json& j, const fs::path& run_root) {
  EvaluationRecord rec;
  rec.task_id = j.at("task_id").get<std::string>();
  rec.sample_index = j.at("sample_index").get<int>();
  rec.point = j.at("point").get<DsePoint>();
  for (const auto& [name, s] : j.at("stages").items()) {
    StageRecord sr;
    sr.stage = parse_stage(name);
    sr.status = parse_stage_status(s.at("status").get<std::string>());
    if (s.contains("wall_time_s")) sr.wall_time_s = s["wall_time_s"].get<double>();
    if (s.contains("log")) sr.log_path = run_root / s["log"].get<std::string>();
    if (s.contains("reports")) {
      for (const auto& r : s["reports"]) {
        sr.report_paths.push_back(run_root / r.get<std::string>());
      }
    }
    rec.stage_records.emplace(sr.stage, sr);
  }
  if (j.contains("ppa")) rec.ppa = j["ppa"].get<PpaRecord>();
  return rec;
}

PassMatrix build_pass_matrix(const RunReport& report, PassKind kind) {
  StageId stage = StageId::Compile;
  if (kind == PassKind::Simulation) stage = StageId::CSim;
  if (kind == PassKind::Synthesis) stage = StageId::Synth;

  std::map<std::pair<std::string, int>, bool> passed;
  for (const EvaluationRecord& rec : report.records) {
    if (rec.sample_index < 0) continue;
    auto it = rec.stage_records.find(stage);
    bool p = it != rec.stage_records.end() && it->second.status == StageStatus::Pass;
    auto key = std::make_pair(rec.task_id, rec.sample_index);
    passed[key] = passed[key] || p;
  }

  PassMatrix m;
  m.kind = kind;
  m.rows.reserve(report.task_ids.size());
  for (const std::string& task : report.task_ids) {
    std::vector<bool> row(static_cast<std::size_t>(report.k), false);
    for (int j = 0; j < report.k; ++j) {
      auto it = passed.find({task, j});
      row[static_cast<std::size_t>(j)] = it != passed.end() && it->second;
    }
    m.rows.push_back(std::move(row));
  }
  m.validate();
  return m;
}

namespace {

std::vector<int> summary_ks(int k) {
  std::vector<int> ks;
  for (int candidate : {1, 5, 10}) {
    if (candidate <= k) ks.push_back(candidate);
  }
  if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
  std::sort(ks.begin(), ks.end());
  return ks;
}

void sort_canonical(std::vector<EvaluationRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const EvaluationRecord& a, const EvaluationRecord& b) {
              if (a.task_id != b.task_id) return a.task_id < b.task_id;
              if (a.sample_index != b.sample_index) return a.sample_index < b.sample_index;
              return a.point_id() < b.point_id();
            });
}

void dedup_canonical(std::vector<EvaluationRecord>& records) {
  std::set<std::string> seen;
  std::vector<EvaluationRecord> out;
  out.reserve(records.size());
  for (EvaluationRecord& rec : records) {
    if (seen.insert(triple_key(rec.task_id, rec.sample_index, rec.point_id())).second) {
      out.push_back(std::move(rec));
    }
  }
  records = std::move(out);
}

// Lexicographic (latency, area, power) minimum; missing objectives sort
// last. The winner is Pareto-minimal by construction.
struct BestPick {
  const EvaluationRecord* record = nullptr;
  std::tuple<double, double, double, int, std::string> key{
      std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
      std::numeric_limits<double>::infinity(), 0, ""};
};

std::tuple<double, double, double, int, std::string> best_key(const EvaluationRecord& rec) {
  const double inf = std::numeric_limits<double>::infinity();
  const PpaRecord& ppa = *rec.ppa;
  double latency = ppa.latency_ns.value_or(inf);
  double area = (ppa.lut && ppa.ff) ? static_cast<double>(*ppa.lut + *ppa.ff) : inf;
  double power = ppa.power_mw.value_or(inf);
  return {latency, area, power, rec.sample_index, rec.point_id()};
}

void compute_derived(RunReport& report, double threshold_pct) {
  sort_canonical(report.records);
  sort_canonical(report.reference_records);

  report.pass_at_k_summary.clear();
  const std::vector<int> ks = summary_ks(report.k);
  for (PassKind kind : {PassKind::Compilation, PassKind::Simulation, PassKind::Synthesis}) {
    PassMatrix m = build_pass_matrix(report, kind);
    std::map<int, double> rates;
    for (int k : ks) rates[k] = report.task_ids.empty() ? 0.0 : pass_at_k(m, k);
    report.pass_at_k_summary[pass_kind_name(kind)] = std::move(rates);
  }

  report.reference_ppa.clear();
  for (const EvaluationRecord& rec : report.reference_records) {
    if (rec.ppa) report.reference_ppa[rec.task_id] = *rec.ppa;
  }

  report.per_design_best.clear();
  report.dse_improved_per_task.clear();
  report.dse_eligible = 0;
  report.dse_improved_count = 0;
  report.dse_threshold_pct = threshold_pct;

  std::map<std::string, BestPick> best;
  for (const EvaluationRecord& rec : report.records) {
    if (rec.sample_index < 0 || !rec.ppa) continue;
    auto synth = rec.stage_records.find(StageId::Synth);
    if (synth == rec.stage_records.end() || synth->second.status != StageStatus::Pass) continue;
    auto key = best_key(rec);
    BestPick& pick = best[rec.task_id];
    if (!pick.record || key < pick.key) {
      pick.record = &rec;
      pick.key = key;
    }
  }

  const std::string baseline_id = baseline_point().point_id();
  for (const auto& [task_id, pick] : best) {
    report.per_design_best[task_id] = pick.record->point_id();

    // Baseline of the same candidate anchors the DSE-improvement check.
    const EvaluationRecord* base = nullptr;
    for (const EvaluationRecord& rec : report.records) {
      if (rec.task_id == task_id && rec.sample_index == pick.record->sample_index &&
          rec.point_id() == baseline_id && rec.ppa) {
        base = &rec;
        break;
      }
    }
    if (!base) continue;
    ++report.dse_eligible;
    bool improved = false;
    try {
      improved = dse_improved(*base->ppa, *pick.record->ppa, threshold_pct);
    } catch (const Error&) {
      improved = false;
    }
    report.dse_improved_per_task[task_id] = improved;
    if (improved) ++report.dse_improved_count;
  }
}

}  // namespace

nlohmann::json summary_to_json(const RunReport& report) {
  nlohmann::json pass = nlohmann::json::object();
  for (const auto& [kind, rates] : report.pass_at_k_summary) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto& [k, rate] : rates) row[std::to_string(k)] = rate;
    pass[kind] = row;
  }

  nlohmann::json skips = nlohmann::json::array();
  for (const SkipEntry& s : report.skips) {
    skips.push_back({{"task_id", s.task_id},
                     {"sample_index", s.sample_index},
                     {"reason", s.reason}});
  }

  nlohmann::json ref = nlohmann::json::object();
  for (const auto& [task, ppa] : report.reference_ppa) ref[task] = ppa;

  nlohmann::json improved = nlohmann::json::object();
  for (const auto& [task, flag] : report.dse_improved_per_task) improved[task] = flag;

  int records_with_ppa = 0;
  for (const auto& rec : report.records) {
    if (rec.ppa) ++records_with_ppa;
  }

  double fraction = report.dse_eligible > 0
                        ? static_cast<double>(report.dse_improved_count) / report.dse_eligible
                        : 0.0;

  return nlohmann::json{
      {"schema", kSchemaVersion},
      {"model_id", report.model_id},
      {"adapter", report.adapter_name},
      {"part", report.target_part},
      {"k", report.k},
      {"task_ids", report.task_ids},
      {"counts",
       {{"tasks", report.task_ids.size()},
        {"records", report.records.size()},
        {"records_with_ppa", records_with_ppa},
        {"reference_records", report.reference_records.size()},
        {"skips", report.skips.size()}}},
      {"pass_at_k", pass},
      {"per_design_best", report.per_design_best},
      {"reference_ppa", ref},
      {"dse_improvement",
       {{"threshold_pct", report.dse_threshold_pct},
        {"eligible", report.dse_eligible},
        {"improved", report.dse_improved_count},
        {"fraction", fraction},
        {"per_task", improved}}},
      {"skips", skips}};
}

namespace {

struct RunPaths {
  fs::path root;
  fs::path config() const { return root / "run_config.json"; }
  fs::path candidates() const { return root / "candidates.jsonl"; }
  fs::path skips() const { return root / "skips.jsonl"; }
  fs::path records() const { return root / "records.jsonl"; }
  fs::path references() const { return root / "reference.jsonl"; }
  fs::path summary() const { return root / "summary.json"; }
  fs::path meta() const { return root / "run_meta.json"; }
  fs::path work() const { return root / "work"; }
};

struct PersistedConfig {
  std::string run_id;
  fs::path corpus_root;
  ModelConfig model;
  DseSpec dse_defaults;
  ExplorationPolicy policy;
  AdapterConfig adapter;
  int k = 1;
  EngineConfig engine;
};

nlohmann::json persisted_config_to_json(const PersistedConfig& pc) {
  return nlohmann::json{{"schema", kSchemaVersion},
                        {"run_id", pc.run_id},
                        {"corpus_root", pc.corpus_root.string()},
                        {"model", pc.model},
                        {"dse_defaults", pc.dse_defaults},
                        {"policy", pc.policy},
                        {"adapter", pc.adapter},
                        {"k", pc.k},
                        {"jobs", pc.engine.jobs},
                        {"target_part", pc.engine.target_part},
                        {"timeouts", pc.engine.timeouts},
                        {"evaluate_reference", pc.engine.evaluate_reference},
                        {"dse_improvement_threshold_pct",
                         pc.engine.dse_improvement_threshold_pct}};
}

PersistedConfig persisted_config_from_json(const nlohmann::json& j,
                                           const fs::path& output_dir) {
  PersistedConfig pc;
  pc.run_id = j.at("run_id").get<std::string>();
  pc.corpus_root = fs::path(j.at("corpus_root").get<std::string>());
  pc.model = j.at("model").get<ModelConfig>();
  pc.dse_defaults = j.at("dse_defaults").get<DseSpec>();
  pc.policy = j.at("policy").get<ExplorationPolicy>();
  pc.adapter = j.at("adapter").get<AdapterConfig>();
  pc.k = j.at("k").get<int>();
  pc.engine.output_dir = output_dir;
  pc.engine.run_id = pc.run_id;
  pc.engine.jobs = j.value("jobs", 1);
  pc.engine.target_part = j.value("target_part", std::string("xc7a200tffv1156-1"));
  if (j.contains("timeouts")) pc.engine.timeouts = j["timeouts"].get<StageTimeouts>();
  pc.engine.evaluate_reference = j.value("evaluate_reference", true);
  pc.engine.dse_improvement_threshold_pct =
      j.value("dse_improvement_threshold_pct", 20.0);
  return pc;
}

struct GenerationResult {
  std::vector<Candidate> candidates;  // all tasks, extraction status attached
  std::vector<SkipEntry> skips;
};

GenerationResult generate_candidates(const Corpus& corpus, const ModelConfig& model_cfg,
                                     int k) {
  GenerationResult out;
  for (const BenchmarkTask& task : corpus.tasks) {
    try {
      std::vector<Candidate> sampled = sample_candidates(task, model_cfg, k);
      for (Candidate& cand : sampled) {
        if (cand.extraction_status != ExtractionStatus::Ok) {
          out.skips.push_back({task.id, cand.sample_index,
                               std::string("extraction: ") +
                                   extraction_status_name(cand.extraction_status)});
        }
        out.candidates.push_back(std::move(cand));
      }
    } catch (const Error& e) {
      if (e.code() == Errc::CacheMiss || e.code() == Errc::BackendUnavailable) {
        out.skips.push_back({task.id, -1, std::string("generation: ") + e.what()});
      } else {
        throw;
      }
    }
  }
  return out;
}

void persist_candidates(const RunPaths& paths, const GenerationResult& gen) {
  std::string lines;
  for (const Candidate& cand : gen.candidates) {
    nlohmann::json j{{"task_id", cand.task_id},
                     {"sample_index", cand.sample_index},
                     {"extraction_status", extraction_status_name(cand.extraction_status)}};
    if (cand.source) j["source"] = *cand.source;
    lines += j.dump();
    lines += '\n';
  }
  write_file_atomic(paths.candidates(), lines);

  std::string skip_lines;
  for (const SkipEntry& s : gen.skips) {
    nlohmann::json j{{"task_id", s.task_id},
                     {"sample_index", s.sample_index},
                     {"reason", s.reason}};
    skip_lines += j.dump();
    skip_lines += '\n';
  }
  write_file_atomic(paths.skips(), skip_lines);
}

GenerationResult load_candidates(const RunPaths& paths) {
  GenerationResult out;
  auto cand_text = read_file_if_exists(paths.candidates());
  if (!cand_text) throw Error(Errc::CorruptState, "candidates.jsonl missing");
  for (const std::string& line : split_lines(*cand_text)) {
    if (trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    Candidate cand;
    cand.task_id = j.at("task_id").get<std::string>();
    cand.sample_index = j.at("sample_index").get<int>();
    cand.extraction_status =
        parse_extraction_status(j.at("extraction_status").get<std::string>());
    if (j.contains("source")) cand.source = j["source"].get<std::string>();
    out.candidates.push_back(std::move(cand));
  }
  if (auto skip_text = read_file_if_exists(paths.skips())) {
    for (const std::string& line : split_lines(*skip_text)) {
      if (trim(line).empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      out.skips.push_back({j.at("task_id").get<std::string>(),
                           j.at("sample_index").get<int>(),
                           j.at("reason").get<std::string>()});
    }
  }
  return out;
}

// Executes the remaining units on a worker pool, appending each finished
// record to the on-disk log so a crash loses at most in-flight work.
void execute_units(const std::vector<WorkUnit>& units, const Adapter& adapter,
                   const EngineConfig& cfg, const RunPaths& paths, RunReport& report) {
  std::atomic<std::size_t> cursor{0};
  std::mutex sink_mu;
  std::ofstream records_out(paths.records(), std::ios::app);
  std::ofstream refs_out(paths.references(), std::ios::app);
  std::exception_ptr first_error;

  auto worker = [&]() {
    while (true) {
      {
        std::lock_guard<std::mutex> lock(sink_mu);
        if (first_error) return;
      }
      std::size_t i = cursor.fetch_add(1);
      if (i >= units.size()) return;
      const WorkUnit& unit = units[i];
      if (cfg.throttle_ms > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(cfg.throttle_ms));
      }
      try {
        fs::path ws_dir = paths.work() / unit.task->id /
                          sample_dir_name(unit.candidate.sample_index) /
                          unit.point.point_id();
        EvaluationRecord rec = evaluate_one(*unit.task, unit.candidate, unit.point, adapter,
                                            ws_dir, cfg.timeouts, cfg.target_part);
        std::lock_guard<std::mutex> lock(sink_mu);
        if (rec.sample_index < 0) {
          refs_out << record_to_json(rec, paths.root).dump() << "\n";
          refs_out.flush();
          report.reference_records.push_back(std::move(rec));
        } else {
          records_out << record_to_json(rec, paths.root).dump() << "\n";
          records_out.flush();
          report.records.push_back(std::move(rec));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(sink_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<EvaluationRecord> load_jsonl_records(const fs::path& file, const fs::path& root) {
  std::vector<EvaluationRecord> out;
  auto text = read_file_if_exists(file);
  if (!text) return out;
  for (const std::string& line : split_lines(*text)) {
    if (trim(line).empty()) continue;
    try {
      out.push_back(record_from_json(nlohmann::json::parse(line), root));
    } catch (const nlohmann::json::exception&) {
      // a torn final line from a crash is dropped and re-executed
      break;
    }
  }
  return out;
}

void finalize_run(const RunPaths& paths, RunReport& report, double threshold_pct) {
  dedup_canonical(report.records);
  dedup_canonical(report.reference_records);
  compute_derived(report, threshold_pct);

  std::string lines;
  for (const EvaluationRecord& rec : report.records) {
    lines += record_to_json(rec, paths.root).dump();
    lines += '\n';
  }
  write_file_atomic(paths.records(), lines);

  std::string ref_lines;
  for (const EvaluationRecord& rec : report.reference_records) {
    ref_lines += record_to_json(rec, paths.root).dump();
    ref_lines += '\n';
  }
  write_file_atomic(paths.references(), ref_lines);

  write_file_atomic(paths.summary(), summary_to_json(report).dump(2) + "\n");
  nlohmann::json meta{{"schema", kSchemaVersion},
                      {"run_id", report.run_id},
                      {"started_at", report.started_at},
                      {"finished_at", report.finished_at}};
  write_file_atomic(paths.meta(), meta.dump(2) + "\n");
}

RunReport execute_run(const Corpus& corpus, const PersistedConfig& pc, const Adapter& adapter,
                      const RunPaths& paths, const GenerationResult& gen,
                      std::vector<EvaluationRecord> existing_records,
                      std::vector<EvaluationRecord> existing_refs,
                      const std::string& started_at) {
  RunReport report;
  report.run_id = pc.run_id;
  report.model_id = pc.model.model_id;
  report.k = pc.k;
  report.adapter_name = adapter.descriptor().name;
  report.target_part = pc.engine.target_part;
  report.started_at = started_at;
  for (const BenchmarkTask& task : corpus.tasks) report.task_ids.push_back(task.id);
  report.skips = gen.skips;
  report.records = std::move(existing_records);
  report.reference_records = std::move(existing_refs);

  std::set<std::string> done;
  for (const EvaluationRecord& rec : report.records) {
    done.insert(triple_key(rec.task_id, rec.sample_index, rec.point_id()));
  }
  for (const EvaluationRecord& rec : report.reference_records) {
    done.insert(triple_key(rec.task_id, rec.sample_index, rec.point_id()));
  }

  std::map<std::string, const BenchmarkTask*> task_by_id;
  for (const BenchmarkTask& task : corpus.tasks) task_by_id[task.id] = &task;

  std::vector<WorkUnit> units;
  for (const Candidate& cand : gen.candidates) {
    if (cand.extraction_status != ExtractionStatus::Ok) continue;
    auto it = task_by_id.find(cand.task_id);
    if (it == task_by_id.end()) continue;
    const BenchmarkTask& task = *it->second;
    for (const DsePoint& point : points_for_task(task, pc.dse_defaults, pc.policy)) {
      if (done.count(triple_key(task.id, cand.sample_index, point.point_id()))) continue;
      units.push_back({&task, cand, point});
    }
  }
  if (pc.engine.evaluate_reference) {
    const DsePoint baseline = baseline_point();
    for (const BenchmarkTask& task : corpus.tasks) {
      if (done.count(triple_key(task.id, -1, baseline.point_id()))) continue;
      Candidate ref;
      ref.task_id = task.id;
      ref.sample_index = -1;
      ref.source = task.reference_source;
      ref.extraction_status = ExtractionStatus::Ok;
      units.push_back({&task, std::move(ref), baseline});
    }
  }

  execute_units(units, adapter, pc.engine, paths, report);

  report.finished_at = utc_timestamp();
  finalize_run(paths, report, pc.engine.dse_improvement_threshold_pct);
  return report;
}

}  // namespace

RunReport run_benchmark(const Corpus& corpus, const ModelConfig& model_cfg,
                        const DseSpec& dse_defaults, const ExplorationPolicy& policy,
                        const Adapter& adapter, int k, const EngineConfig& cfg) {
  if (k <= 0) throw Error(Errc::ConfigError, "k must be >= 1");
  if (cfg.jobs < 1) throw Error(Errc::ConfigError, "jobs must be >= 1");
  dse_defaults.validate();
  policy.validate();

  PersistedConfig pc;
  pc.run_id = cfg.run_id.empty() ? generate_run_id() : cfg.run_id;
  pc.corpus_root = corpus.root;
  pc.model = model_cfg;
  pc.dse_defaults = dse_defaults;
  pc.policy = policy;
  if (cfg.adapter_config) {
    pc.adapter = *cfg.adapter_config;
  } else {
    pc.adapter.name = adapter.descriptor().name;
    pc.adapter.tool_binary = adapter.descriptor().tool_binary;
    pc.adapter.default_part = cfg.target_part;
  }
  pc.k = k;
  pc.engine = cfg;
  pc.engine.run_id = pc.run_id;

  RunPaths paths{run_dir(cfg.output_dir, pc.run_id)};
  if (fs::exists(paths.config())) {
    throw Error(Errc::ConfigError,
                "run already exists, resume it instead: " + paths.root.string());
  }
  fs::create_directories(paths.work());
  const std::string started_at = utc_timestamp();
  write_file_atomic(paths.config(), persisted_config_to_json(pc).dump(2) + "\n");

  GenerationResult gen = generate_candidates(corpus, model_cfg, k);
  persist_candidates(paths, gen);

  return execute_run(corpus, pc, adapter, paths, gen, {}, {}, started_at);
}

RunReport resume_run(const fs::path& output_dir, const std::string& run_id) {
  RunPaths paths{run_dir(output_dir, run_id)};
  if (!fs::exists(paths.root)) {
    throw Error(Errc::UnknownRun, paths.root.string());
  }
  auto config_text = read_file_if_exists(paths.config());
  if (!config_text) {
    throw Error(Errc::CorruptState, "run_config.json missing in " + paths.root.string());
  }
  PersistedConfig pc;
  try {
    pc = persisted_config_from_json(nlohmann::json::parse(*config_text), output_dir);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::CorruptState, std::string("run_config.json: ") + e.what());
  }

  if (fs::exists(paths.summary())) {
    return load_run_report(output_dir, run_id);  // finished: resume is a no-op
  }

  Corpus corpus = load_corpus(pc.corpus_root);
  std::unique_ptr<Adapter> adapter = make_adapter(pc.adapter);

  GenerationResult gen;
  if (fs::exists(paths.candidates())) {
    gen = load_candidates(paths);
  } else {
    gen = generate_candidates(corpus, pc.model, pc.k);
    persist_candidates(paths, gen);
  }

  std::vector<EvaluationRecord> existing = load_jsonl_records(paths.records(), paths.root);
  std::vector<EvaluationRecord> refs = load_jsonl_records(paths.references(), paths.root);
  return execute_run(corpus, pc, *adapter, paths, gen, std::move(existing), std::move(refs),
                     utc_timestamp());
}

RunReport load_run_report(const fs::path& output_dir, const std::string& run_id) {
  RunPaths paths{run_dir(output_dir, run_id)};
  if (!fs::exists(paths.root)) throw Error(Errc::UnknownRun, paths.root.string());
  auto config_text = read_file_if_exists(paths.config());
  if (!config_text) {
    throw Error(Errc::CorruptState, "run_config.json missing in " + paths.root.string());
  }

  PersistedConfig pc;
  try {
    pc = persisted_config_from_json(nlohmann::json::parse(*config_text), output_dir);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::CorruptState, std::string("run_config.json: ") + e.what());
  }

  RunReport report;
  report.run_id = pc.run_id;
  report.model_id = pc.model.model_id;
  report.k = pc.k;
  report.adapter_name = pc.adapter.name;
  report.target_part = pc.engine.target_part;
  report.records = load_jsonl_records(paths.records(), paths.root);
  report.reference_records = load_jsonl_records(paths.references(), paths.root);

  auto summary_text = read_file_if_exists(paths.summary());
  if (summary_text) {
    try {
      nlohmann::json s = nlohmann::json::parse(*summary_text);
      report.task_ids = s.at("task_ids").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::CorruptState, std::string("summary.json: ") + e.what());
    }
  } else {
    std::set<std::string> ids;
    for (const auto& rec : report.records) ids.insert(rec.task_id);
    report.task_ids.assign(ids.begin(), ids.end());
  }

  if (auto meta_text = read_file_if_exists(paths.meta())) {
    try {
      nlohmann::json m = nlohmann::json::parse(*meta_text);
      report.started_at = m.value("started_at", std::string());
      report.finished_at = m.value("finished_at", std::string());
    } catch (const nlohmann::json::exception&) {
    }
  }

  if (auto skips_text = read_file_if_exists(paths.skips())) {
    for (const std::string& line : split_lines(*skips_text)) {
      if (trim(line).empty()) continue;
      nlohmann::json j = nlohmann::json::parse(line);
      report.skips.push_back({j.at("task_id").get<std::string>(),
                              j.at("sample_index").get<int>(),
                              j.at("reason").get<std::string>()});
    }
  }

  dedup_canonical(report.records);
  dedup_canonical(report.reference_records);
  compute_derived(report, pc.engine.dse_improvement_threshold_pct);
  return report;
}

}  // namespace hlsbench
