#include <doctest.h>

#include <random>

#include "hlsbench/corpus.hpp"
#include "hlsbench/errors.hpp"
#include "hlsbench/subprocess.hpp"
#include "hlsbench/toolchain.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::TempDir;
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

std::string dir_fingerprint(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::string all;
  for (const fs::path& f : files) {
    all += f.lexically_relative(dir).generic_string();
    all += '\0';
    all += read_file(f);
    all += '\0';
  }
  return sha256_hex(all);
}

}  // namespace

TEST_SUITE_BEGIN("toolchain");

TEST_CASE("mock cost model matches the closed form") {
  MockProfile profile;
  profile.base_cycles = 100;
  profile.base_lut = 500;
  profile.min_period_ns = 3.0;

  SUBCASE("defaults: clock 10, no pipeline, unroll 1") {
    auto [statuses, ppa] = mock_evaluate(profile, baseline_point());
    CHECK(ppa.latency_cycles == 200);
    CHECK(ppa.latency_ns == doctest::Approx(2000.0));
    CHECK(ppa.lut == 500);
    CHECK(ppa.wns_ns == doctest::Approx(7.0));
    CHECK(ppa.fmax_mhz == doctest::Approx(1000.0 / 3.0));
    for (StageId stage : kStageOrder) CHECK(statuses.at(stage) == StageStatus::Pass);
  }
  SUBCASE("unroll 4, pipeline ii=1, clock 5") {
    DsePoint p;
    p.unroll_factor = 4;
    p.enable_pipeline = true;
    p.pipeline_ii = 1;
    p.clock_period_ns = 5.0;
    auto [statuses, ppa] = mock_evaluate(profile, p);
    CHECK(ppa.latency_cycles == 25);
    CHECK(ppa.latency_ns == doctest::Approx(125.0));
    CHECK(ppa.lut == 2000);
    CHECK(statuses.at(StageId::Impl) == StageStatus::Pass);
  }
  SUBCASE("scripted failure at synthesis") {
    profile.fail_at = StageId::Synth;
    auto [statuses, ppa] = mock_evaluate(profile, baseline_point());
    CHECK(statuses.at(StageId::Compile) == StageStatus::Pass);
    CHECK(statuses.at(StageId::CSim) == StageStatus::Pass);
    CHECK(statuses.at(StageId::Synth) == StageStatus::Fail);
    CHECK(statuses.at(StageId::Impl) == StageStatus::NotRun);
  }
  SUBCASE("negative slack fails implementation") {
    profile.min_period_ns = 12.0;
    auto [statuses, ppa] = mock_evaluate(profile, baseline_point());
    CHECK(statuses.at(StageId::Synth) == StageStatus::Pass);
    CHECK(statuses.at(StageId::Impl) == StageStatus::Fail);
    CHECK(*ppa.wns_ns < 0);
  }
}

TEST_CASE("mock latency non-increasing and lut non-decreasing in unroll") {
  std::mt19937_64 rng(991);
  for (int trial = 0; trial < 50; ++trial) {
    MockProfile profile;
    profile.base_cycles = 1 + static_cast<long>(rng() % 4000);
    profile.base_lut = 1 + static_cast<long>(rng() % 3000);
    DsePoint p;
    p.enable_pipeline = (rng() % 2) == 0;
    p.pipeline_ii = 1 + static_cast<int>(rng() % 3);
    p.clock_period_ns = 4.0 + (rng() % 12);

    long prev_latency = -1;
    long prev_lut = -1;
    for (int unroll : {1, 2, 3, 4, 6, 8, 16}) {
      p.unroll_factor = unroll;
      auto [statuses, ppa] = mock_evaluate(profile, p);
      if (prev_latency >= 0) {
        CHECK(*ppa.latency_cycles <= prev_latency);
        CHECK(*ppa.lut >= prev_lut);
      }
      prev_latency = *ppa.latency_cycles;
      prev_lut = *ppa.lut;
    }
  }
}

TEST_CASE("source markers override the task profile") {
  MockProfile base;
  MockProfile overridden = apply_mock_source_overrides(
      base, "// mock: base_lut=777 fail_at=csim\nint f();\n// mock: base_cycles=50\n");
  CHECK(overridden.base_lut == 777);
  CHECK(overridden.base_cycles == 50);
  REQUIRE(overridden.fail_at.has_value());
  CHECK(*overridden.fail_at == StageId::CSim);
  CHECK(base.base_lut == 500);
}

TEST_CASE("prepare_workspace lays out sources, point and scripts") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  AdapterConfig cfg;
  auto adapter = make_mock_adapter(cfg);
  TempDir tmp("ws");

  Candidate cand = ok_candidate(task, task.reference_source);
  Workspace ws = prepare_workspace(*adapter, task, cand, baseline_point(), tmp / "w1",
                                   "xc7a200tffv1156-1");
  CHECK(fs::exists(ws.dir / "design.cpp"));
  CHECK(fs::exists(ws.dir / "testbench.cpp"));
  CHECK(fs::exists(ws.dir / "point.json"));
  CHECK(fs::exists(ws.dir / "mock_profile.yaml"));

  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(ws.dir)) {
    if (entry.is_regular_file()) ++files;
  }
  CHECK(files >= 3);
}

TEST_CASE("re-preparing a workspace is byte-identical") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[1];
  AdapterConfig cfg;
  auto adapter = make_mock_adapter(cfg);
  TempDir tmp("ws-idem");

  Candidate cand = ok_candidate(task, task.reference_source);
  DsePoint point;
  point.enable_pipeline = true;
  point.unroll_factor = 2;
  prepare_workspace(*adapter, task, cand, point, tmp / "w", "xc7a200tffv1156-1");
  std::string first = dir_fingerprint(tmp / "w");
  prepare_workspace(*adapter, task, cand, point, tmp / "w", "xc7a200tffv1156-1");
  CHECK(dir_fingerprint(tmp / "w") == first);
}

TEST_CASE("candidate that failed extraction is rejected") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  AdapterConfig cfg;
  auto adapter = make_mock_adapter(cfg);
  TempDir tmp("ws-bad");

  Candidate cand;
  cand.task_id = task.id;
  cand.extraction_status = ExtractionStatus::SignatureMissing;
  try {
    prepare_workspace(*adapter, task, cand, baseline_point(), tmp / "w", "part");
    FAIL("expected InvalidCandidate");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidCandidate);
  }
}

TEST_CASE("run_stage drives the mock through the gated ladder") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  AdapterConfig cfg;
  auto adapter = make_mock_adapter(cfg);
  TempDir tmp("stage");

  Candidate cand = ok_candidate(task, task.reference_source);
  Workspace ws = prepare_workspace(*adapter, task, cand, baseline_point(), tmp / "w",
                                   "xc7a200tffv1156-1");

  StageRecord compile = run_stage(*adapter, ws, StageId::Compile, 10);
  CHECK(compile.status == StageStatus::Pass);
  CHECK(fs::exists(compile.log_path));
  CHECK(compile.wall_time_s >= 0);

  StageRecord csim = run_stage(*adapter, ws, StageId::CSim, 10);
  CHECK(csim.status == StageStatus::Pass);
  StageRecord synth = run_stage(*adapter, ws, StageId::Synth, 10);
  CHECK(synth.status == StageStatus::Pass);
  REQUIRE(synth.report_paths.size() == 1);
  CHECK(contains(read_file(synth.report_paths[0]), "latency_cycles="));
}

TEST_CASE("run_stage refuses to skip ahead") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  AdapterConfig cfg;
  auto adapter = make_mock_adapter(cfg);
  TempDir tmp("gate");

  Candidate cand = ok_candidate(task, task.reference_source);
  Workspace ws = prepare_workspace(*adapter, task, cand, baseline_point(), tmp / "w",
                                   "xc7a200tffv1156-1");
  try {
    run_stage(*adapter, ws, StageId::Synth, 10);
    FAIL("expected StageOrder");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::StageOrder);
  }
}

TEST_CASE("fail_at marker fails the named stage and blocks later ones") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  AdapterConfig cfg;
  auto adapter = make_mock_adapter(cfg);
  TempDir tmp("failat");

  std::string source = "// mock: fail_at=csim\n" + task.reference_source;
  Candidate cand = ok_candidate(task, source);
  Workspace ws = prepare_workspace(*adapter, task, cand, baseline_point(), tmp / "w",
                                   "xc7a200tffv1156-1");
  CHECK(run_stage(*adapter, ws, StageId::Compile, 10).status == StageStatus::Pass);
  CHECK(run_stage(*adapter, ws, StageId::CSim, 10).status == StageStatus::Fail);
  CHECK_THROWS_AS(run_stage(*adapter, ws, StageId::Synth, 10), Error);
}

TEST_CASE("vitis adapter renders scripts with part, clock and directives") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  AdapterConfig cfg;
  cfg.name = "vitis";
  auto adapter = make_vitis_adapter(cfg);
  TempDir tmp("vitis");

  Candidate cand = ok_candidate(task, task.reference_source);
  DsePoint point;
  point.clock_period_ns = 5.0;
  point.enable_pipeline = true;
  point.pipeline_ii = 2;
  point.unroll_factor = 4;
  point.backend_strategy = BackendStrategy::PerformanceExplore;
  Workspace ws = prepare_workspace(*adapter, task, cand, point, tmp / "w", "xc7a200tffv1156-1");

  std::string common = read_file(ws.dir / "hls_common.tcl");
  CHECK(contains(common, "set_part {xc7a200tffv1156-1}"));
  CHECK(contains(common, "create_clock -period 5"));
  CHECK(contains(common, "set_directive_pipeline -II 2 \"vec_add\""));
  CHECK(contains(common, "set_directive_unroll -factor 4 \"vec_add\""));
  CHECK(contains(common, "set_top vec_add"));
  CHECK(fs::exists(ws.dir / "compile.tcl"));
  CHECK(fs::exists(ws.dir / "csim.tcl"));
  CHECK(fs::exists(ws.dir / "synth.tcl"));
  std::string impl = read_file(ws.dir / "impl.tcl");
  CHECK(contains(impl, "Performance_Explore"));
  CHECK(contains(impl, "report_power"));
}

TEST_CASE("extra script templates receive the named substitutions") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  TempDir tmp("tmpl");
  write_file(tmp / "extra.tcl",
             "# sources: {sources}\n"
             "puts \"top={top_function} part={part} clk={clock_period_ns} "
             "strategy={strategy}\"\n"
             "{directives}");

  AdapterConfig cfg;
  cfg.name = "vitis";
  cfg.script_template = tmp / "extra.tcl";
  auto adapter = make_vitis_adapter(cfg);

  Candidate cand = ok_candidate(task, task.reference_source);
  DsePoint point;
  point.clock_period_ns = 7.5;
  point.unroll_factor = 2;
  point.backend_strategy = BackendStrategy::AreaExplore;
  Workspace ws = prepare_workspace(*adapter, task, cand, point, tmp / "w", "xc7a200t");

  std::string common = read_file(ws.dir / "hls_common.tcl");
  CHECK(contains(common, "# sources: design.cpp testbench.cpp"));
  CHECK(contains(common, "top=vec_add part=xc7a200t clk=7.5 strategy=Area_Explore"));
  CHECK(!contains(common, "{top_function}"));
}

TEST_CASE("missing tool binary reports ToolError naming the binary") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  AdapterConfig cfg;
  cfg.name = "vitis";
  cfg.tool_binary = "/nonexistent/bin/vitis_hls";
  auto adapter = make_vitis_adapter(cfg);
  TempDir tmp("toolerr");

  Candidate cand = ok_candidate(task, task.reference_source);
  Workspace ws = prepare_workspace(*adapter, task, cand, baseline_point(), tmp / "w", "part");
  StageRecord rec = run_stage(*adapter, ws, StageId::Compile, 5);
  CHECK(rec.status == StageStatus::ToolError);
  CHECK(contains(read_file(rec.log_path), "/nonexistent/bin/vitis_hls"));
}

TEST_CASE("timeouts kill the stage within bounds") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  TempDir tmp("timeout");
  fs::path slow_tool = tmp / "slow_tool.sh";
  write_file(slow_tool, "#!/bin/sh\nsleep 30\n");
  fs::permissions(slow_tool, fs::perms::owner_all);

  AdapterConfig cfg;
  cfg.name = "vitis";
  cfg.tool_binary = slow_tool;
  auto adapter = make_vitis_adapter(cfg);
  Candidate cand = ok_candidate(task, task.reference_source);
  Workspace ws = prepare_workspace(*adapter, task, cand, baseline_point(), tmp / "w", "part");

  StageRecord rec = run_stage(*adapter, ws, StageId::Compile, 1.0);
  CHECK(rec.status == StageStatus::Timeout);
  CHECK(rec.wall_time_s < 3.0);  // timeout_s + 2s bound
}

TEST_CASE("adapter config loads from yaml") {
  TempDir tmp("acfg");
  write_file(tmp / "adapter.yaml",
             "name: vitis\ntool_binary: /opt/xilinx/vitis_hls\ndefault_part: xc7k70t\n");
  AdapterConfig cfg = load_adapter_config(tmp / "adapter.yaml");
  CHECK(cfg.name == "vitis");
  CHECK(cfg.tool_binary == fs::path("/opt/xilinx/vitis_hls"));
  CHECK(cfg.default_part == "xc7k70t");
}

TEST_CASE("subprocess timeout kills the whole process group") {
  SubprocessSpec spec;
  spec.argv = {"/bin/sh", "-c", "sleep 30 & sleep 30"};
  spec.timeout_s = 0.5;
  auto t0 = std::chrono::steady_clock::now();
  SubprocessResult res = run_subprocess(spec);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(res.timed_out);
  CHECK(wall < 2.5);
}

TEST_SUITE_END();
