#include <doctest.h>

#include <set>

#include "hlsbench/engine.hpp"
#include "hlsbench/errors.hpp"
#include "hlsbench/prompts.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::TempDir;
using hlsbench::testing::copy_tree;
using hlsbench::testing::fixture_dir;

namespace {

Candidate ok_candidate(const BenchmarkTask& task, std::string source, int index = 0) {
  Candidate cand;
  cand.task_id = task.id;
  cand.sample_index = index;
  cand.source = std::move(source);
  cand.extraction_status = ExtractionStatus::Ok;
  return cand;
}

// One-task corpus whose replay cache answers with the reference source.
struct MiniRun {
  TempDir tmp{"mini"};
  Corpus corpus;
  ModelConfig model;

  explicit MiniRun(int cached_samples = 1) {
    Corpus fixture = load_corpus(fixture_dir() / "corpus");
    Corpus single;
    single.tasks.push_back(fixture.tasks[0]);
    write_corpus(single, tmp / "corpus");
    corpus = load_corpus(tmp / "corpus");

    model.model_id = "mini-model";
    model.endpoint_kind = EndpointKind::ReplayCache;
    model.temperature = 0.0;
    model.api_params["cache_dir"] = (tmp / "cache").string();

    ResponseCache cache(tmp / "cache");
    const std::string prompt = render_codegen_prompt(corpus.tasks[0]);
    for (int j = 0; j < cached_samples; ++j) {
      cache.store(cache_key(model.model_id, prompt, j, 0.0),
                  "```cpp\n" + corpus.tasks[0].reference_source + "\n```\n", model.model_id,
                  corpus.tasks[0].id, j, 0.0);
    }
  }
};

}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("points_for_task includes the baseline and honors task-local specs") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  DseSpec defaults = parse_dse_spec(read_file(fixture_dir() / "dse" / "default4.yaml"));
  ExplorationPolicy policy;

  std::vector<DsePoint> with_defaults = points_for_task(corpus.tasks[0], defaults, policy);
  CHECK(with_defaults.size() == 4);
  bool has_baseline = false;
  for (const DsePoint& p : with_defaults) {
    if (p.point_id() == baseline_point().point_id()) has_baseline = true;
  }
  CHECK(has_baseline);

  // design_004 has its own dse.yaml (clock x unroll)
  std::vector<DsePoint> task_local = points_for_task(corpus.tasks[3], defaults, policy);
  CHECK(task_local.size() == 4);
  std::set<double> clocks;
  for (const DsePoint& p : task_local) clocks.insert(p.clock_period_ns);
  CHECK(clocks == std::set<double>{5.0, 10.0});
}

TEST_CASE("evaluate_candidate produces one record per point with full PPA") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  auto adapter = make_mock_adapter(AdapterConfig{});
  TempDir tmp("evalc");

  DsePoint fast;
  fast.enable_pipeline = true;
  fast.unroll_factor = 2;
  std::vector<EvaluationRecord> records =
      evaluate_candidate(task, ok_candidate(task, task.reference_source),
                         {baseline_point(), fast}, *adapter, tmp / "work", StageTimeouts{},
                         "xc7a200tffv1156-1");
  REQUIRE(records.size() == 2);
  for (const EvaluationRecord& rec : records) {
    for (StageId stage : kStageOrder) {
      CHECK(rec.stage_records.at(stage).status == StageStatus::Pass);
    }
    REQUIRE(rec.ppa.has_value());
    CHECK(rec.ppa->latency_cycles.has_value());
    CHECK(rec.ppa->power_mw.has_value());
    CHECK(rec.ppa->wns_ns.has_value());
  }
}

TEST_CASE("evaluate_candidate gates on the first failing stage") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  auto adapter = make_mock_adapter(AdapterConfig{});
  TempDir tmp("evalf");

  std::string failing = "// mock: fail_at=csim\n" + task.reference_source;
  DsePoint p2;
  p2.unroll_factor = 2;
  DsePoint p3;
  p3.unroll_factor = 4;
  std::vector<EvaluationRecord> records =
      evaluate_candidate(task, ok_candidate(task, failing), {baseline_point(), p2, p3},
                         *adapter, tmp / "work", StageTimeouts{}, "part");
  REQUIRE(records.size() == 3);
  for (const EvaluationRecord& rec : records) {
    CHECK(rec.stage_records.at(StageId::Compile).status == StageStatus::Pass);
    CHECK(rec.stage_records.at(StageId::CSim).status == StageStatus::Fail);
    CHECK(rec.stage_records.at(StageId::Synth).status == StageStatus::NotRun);
    CHECK(rec.stage_records.at(StageId::Impl).status == StageStatus::NotRun);
    CHECK(!rec.ppa.has_value());
  }
}

TEST_CASE("evaluate_candidate returns nothing for extraction failures") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  auto adapter = make_mock_adapter(AdapterConfig{});
  TempDir tmp("evalx");

  Candidate bad;
  bad.task_id = task.id;
  bad.extraction_status = ExtractionStatus::NoCodeBlock;
  std::vector<EvaluationRecord> records = evaluate_candidate(
      task, bad, {baseline_point()}, *adapter, tmp / "work", StageTimeouts{}, "part");
  CHECK(records.empty());
}

TEST_CASE("minimal run yields exactly one record") {
  MiniRun mini;
  auto adapter = make_mock_adapter(AdapterConfig{});
  EngineConfig cfg;
  cfg.output_dir = mini.tmp / "out";
  cfg.run_id = "mini";
  RunReport report = run_benchmark(mini.corpus, mini.model, DseSpec{}, ExplorationPolicy{},
                                   *adapter, 1, cfg);
  CHECK(report.records.size() == 1);
  CHECK(report.reference_records.size() == 1);
  CHECK(report.skips.empty());
  CHECK(report.per_design_best.size() == 1);
  CHECK(fs::exists(run_dir(cfg.output_dir, "mini") / "summary.json"));
  CHECK(fs::exists(run_dir(cfg.output_dir, "mini") / "records.jsonl"));
}

TEST_CASE("empty corpus produces an empty report") {
  TempDir tmp("empty");
  fs::create_directories(tmp / "corpus");
  Corpus corpus = load_corpus(tmp / "corpus");
  ModelConfig model;
  model.model_id = "m";
  model.api_params["cache_dir"] = (tmp / "cache").string();
  auto adapter = make_mock_adapter(AdapterConfig{});
  EngineConfig cfg;
  cfg.output_dir = tmp / "out";
  cfg.run_id = "empty";
  RunReport report =
      run_benchmark(corpus, model, DseSpec{}, ExplorationPolicy{}, *adapter, 1, cfg);
  CHECK(report.records.empty());
  CHECK(report.task_ids.empty());
  CHECK(report.pass_at_k_summary.at("compilation").at(1) == doctest::Approx(0.0));
}

TEST_CASE("record json round-trips with relative paths") {
  MiniRun mini;
  auto adapter = make_mock_adapter(AdapterConfig{});
  EngineConfig cfg;
  cfg.output_dir = mini.tmp / "out";
  cfg.run_id = "rt";
  RunReport report = run_benchmark(mini.corpus, mini.model, DseSpec{}, ExplorationPolicy{},
                                   *adapter, 1, cfg);
  REQUIRE(report.records.size() == 1);

  fs::path root = run_dir(cfg.output_dir, "rt");
  nlohmann::json j = record_to_json(report.records[0], root);
  CHECK(!j.dump().empty());
  // paths inside the run dir serialize relative
  CHECK(j["stages"]["compile"]["log"].get<std::string>().rfind("work/", 0) == 0);

  EvaluationRecord back = record_from_json(j, root);
  CHECK(back.task_id == report.records[0].task_id);
  CHECK(back.point_id() == report.records[0].point_id());
  CHECK(back.stage_records.at(StageId::Compile).status == StageStatus::Pass);
  CHECK(back.ppa == report.records[0].ppa);
}

TEST_CASE("aggregate pass counts respect the stage ladder") {
  TempDir tmp("ladder");
  Corpus corpus = load_corpus(fixture_dir() / "corpus");

  ModelConfig model;
  model.model_id = "ladder-model";
  model.endpoint_kind = EndpointKind::ReplayCache;
  model.temperature = 0.0;
  model.api_params["cache_dir"] = (tmp / "cache").string();
  ResponseCache cache(tmp / "cache");
  // every task answers with its own reference, three with scripted failures
  int idx = 0;
  for (const BenchmarkTask& task : corpus.tasks) {
    std::string body = task.reference_source;
    if (idx % 4 == 1) body = "// mock: fail_at=compile\n" + body;
    if (idx % 4 == 2) body = "// mock: fail_at=csim\n" + body;
    if (idx % 4 == 3) body = "// mock: fail_at=synth\n" + body;
    cache.store(cache_key(model.model_id, render_codegen_prompt(task), 0, 0.0),
                "```cpp\n" + body + "\n```\n", model.model_id, task.id, 0, 0.0);
    ++idx;
  }

  auto adapter = make_mock_adapter(AdapterConfig{});
  EngineConfig cfg;
  cfg.output_dir = tmp / "out";
  cfg.run_id = "ladder";
  cfg.evaluate_reference = false;
  RunReport report =
      run_benchmark(corpus, model, DseSpec{}, ExplorationPolicy{}, *adapter, 1, cfg);

  auto count_pass = [&](StageId stage) {
    int n = 0;
    for (const EvaluationRecord& rec : report.records) {
      if (rec.stage_records.at(stage).status == StageStatus::Pass) ++n;
    }
    return n;
  };
  int compile = count_pass(StageId::Compile);
  int csim = count_pass(StageId::CSim);
  int synth = count_pass(StageId::Synth);
  CHECK(compile >= csim);
  CHECK(csim >= synth);
  CHECK(compile > synth);  // the scripted failures actually bit

  PassMatrix mc = build_pass_matrix(report, PassKind::Compilation);
  PassMatrix ms = build_pass_matrix(report, PassKind::Simulation);
  PassMatrix my = build_pass_matrix(report, PassKind::Synthesis);
  CHECK(pass_at_k(mc, 1) >= pass_at_k(ms, 1));
  CHECK(pass_at_k(ms, 1) >= pass_at_k(my, 1));
}

TEST_CASE("resume of unknown or corrupt runs reports the right errors") {
  TempDir tmp("resume-err");
  try {
    resume_run(tmp / "out", "no-such-run");
    FAIL("expected UnknownRun");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnknownRun);
  }

  fs::create_directories(run_dir(tmp / "out", "broken"));
  try {
    resume_run(tmp / "out", "broken");
    FAIL("expected CorruptState");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CorruptState);
  }
}

TEST_CASE("resume of a finished run is a no-op") {
  MiniRun mini;
  auto adapter = make_mock_adapter(AdapterConfig{});
  EngineConfig cfg;
  cfg.output_dir = mini.tmp / "out";
  cfg.run_id = "fin";
  RunReport first = run_benchmark(mini.corpus, mini.model, DseSpec{}, ExplorationPolicy{},
                                  *adapter, 1, cfg);
  std::string summary_before = read_file(run_dir(cfg.output_dir, "fin") / "summary.json");

  RunReport again = resume_run(cfg.output_dir, "fin");
  CHECK(again.records.size() == first.records.size());
  CHECK(read_file(run_dir(cfg.output_dir, "fin") / "summary.json") == summary_before);
}

TEST_CASE("starting a run twice under one id is refused") {
  MiniRun mini;
  auto adapter = make_mock_adapter(AdapterConfig{});
  EngineConfig cfg;
  cfg.output_dir = mini.tmp / "out";
  cfg.run_id = "dup";
  run_benchmark(mini.corpus, mini.model, DseSpec{}, ExplorationPolicy{}, *adapter, 1, cfg);
  CHECK_THROWS_AS(run_benchmark(mini.corpus, mini.model, DseSpec{}, ExplorationPolicy{},
                                *adapter, 1, cfg),
                  Error);
}

TEST_CASE("record accounting matches extractions times points") {
  TempDir tmp("account");
  copy_tree(fixture_dir() / "corpus", tmp / "corpus");
  Corpus corpus = load_corpus(tmp / "corpus");

  ModelConfig model;
  model.model_id = "acct-model";
  model.endpoint_kind = EndpointKind::ReplayCache;
  model.temperature = 0.0;
  model.api_params["cache_dir"] = (tmp / "cache").string();
  ResponseCache cache(tmp / "cache");
  int idx = 0;
  for (const BenchmarkTask& task : corpus.tasks) {
    // every third task yields an unusable response
    std::string response = idx % 3 == 2 ? "no code here, sorry"
                                        : "```cpp\n" + task.reference_source + "\n```\n";
    cache.store(cache_key(model.model_id, render_codegen_prompt(task), 0, 0.0), response,
                model.model_id, task.id, 0, 0.0);
    ++idx;
  }

  DseSpec defaults = parse_dse_spec(read_file(fixture_dir() / "dse" / "default4.yaml"));
  auto adapter = make_mock_adapter(AdapterConfig{});
  EngineConfig cfg;
  cfg.output_dir = tmp / "out";
  cfg.run_id = "acct";
  RunReport report =
      run_benchmark(corpus, model, defaults, ExplorationPolicy{}, *adapter, 1, cfg);

  ExplorationPolicy policy;
  std::size_t expected = 0;
  std::set<std::string> skipped;
  for (const SkipEntry& s : report.skips) skipped.insert(s.task_id);
  for (const BenchmarkTask& task : corpus.tasks) {
    if (!skipped.count(task.id)) expected += points_for_task(task, defaults, policy).size();
  }
  CHECK(report.records.size() == expected);
  CHECK(report.skips.size() == 3);
}

TEST_SUITE_END();
