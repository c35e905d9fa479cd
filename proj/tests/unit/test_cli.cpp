#include <doctest.h>

#include "hlsbench/subprocess.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::TempDir;
using hlsbench::testing::cli_path;
using hlsbench::testing::copy_tree;
using hlsbench::testing::fixture_dir;

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::vector<std::string>& args, const fs::path& out_file) {
  SubprocessSpec spec;
  spec.argv.push_back(cli_path().string());
  spec.argv.insert(spec.argv.end(), args.begin(), args.end());
  spec.stdout_path = out_file;
  spec.timeout_s = 120;
  SubprocessResult res = run_subprocess(spec);
  REQUIRE(!res.spawn_failed);
  REQUIRE(!res.timed_out);
  std::string output = read_file_if_exists(out_file).value_or("");
  return {res.exit_code, output};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("corpus validate exits 0 on the clean fixture corpus") {
  TempDir tmp("cli-validate");
  CliResult res = run_cli({"corpus", "validate", "--corpus",
                           (fixture_dir() / "corpus").string(), "--out",
                           (tmp / "out").string()},
                          tmp / "stdout.txt");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "0 errors"));
  CHECK(fs::exists(tmp / "out" / "findings.json"));
}

TEST_CASE("corpus validate exits 1 when a task is broken") {
  TempDir tmp("cli-broken");
  copy_tree(fixture_dir() / "corpus", tmp / "corpus");
  fs::remove(tmp / "corpus" / "design_003" / "testbench.cpp");
  CliResult res = run_cli({"corpus", "validate", "--corpus", (tmp / "corpus").string(),
                           "--out", (tmp / "out").string()},
                          tmp / "stdout.txt");
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "design_003"));
}

TEST_CASE("corpus validate exits 2 for a nonexistent path") {
  TempDir tmp("cli-nopath");
  CliResult res = run_cli({"corpus", "validate", "--corpus", "/no/such/corpus", "--out",
                           (tmp / "out").string()},
                          tmp / "stdout.txt");
  CHECK(res.exit_code == 2);
}

TEST_CASE("dse expand reports the point counts") {
  TempDir tmp("cli-dse");
  CliResult pruned = run_cli(
      {"dse", "expand", "--spec", (fixture_dir() / "dse" / "listing1.yaml").string(),
       "--count-only"},
      tmp / "a.txt");
  CHECK(pruned.exit_code == 0);
  CHECK(contains(pruned.output, "2592 points"));

  CliResult raw = run_cli(
      {"dse", "expand", "--spec", (fixture_dir() / "dse" / "listing1.yaml").string(),
       "--count-only", "--no-prune"},
      tmp / "b.txt");
  CHECK(contains(raw.output, "3456 points"));
}

TEST_CASE("parse-report emits the parsed record as json") {
  TempDir tmp("cli-parse");
  CliResult res = run_cli(
      {"parse-report", "--format", "generic_kv", "--synth",
       (fixture_dir() / "reports" / "synth_generic.txt").string()},
      tmp / "out.txt");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "\"latency_cycles\": 200"));
  CHECK(contains(res.output, "\"lut\": 512"));
}

TEST_CASE("report exits 2 for an unknown run id") {
  TempDir tmp("cli-unknown");
  CliResult res = run_cli({"report", "never-ran", "--out", (tmp / "out").string()},
                          tmp / "stdout.txt");
  CHECK(res.exit_code == 2);
}

TEST_CASE("generate exits 1 when the cache lacks responses") {
  TempDir tmp("cli-gen");
  CliResult res = run_cli({"generate", "--corpus", (fixture_dir() / "corpus").string(),
                           "--model", "uncached", "--backend", "replay_cache", "--k", "1",
                           "--out", (tmp / "out").string(), "--cache-dir",
                           (tmp / "cache").string()},
                          tmp / "stdout.txt");
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "generation failed"));
}

TEST_SUITE_END();
