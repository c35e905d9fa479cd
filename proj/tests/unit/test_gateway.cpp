#include <doctest.h>

#include <random>

#include "hlsbench/corpus.hpp"
#include "hlsbench/errors.hpp"
#include "hlsbench/gateway.hpp"
#include "hlsbench/prompts.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::TempDir;
using hlsbench::testing::fixture_dir;

TEST_SUITE_BEGIN("gateway");

TEST_CASE("extract_code pulls a tagged fenced block") {
  auto [code, status] =
      extract_code("```cpp\nint top(int a){return a;}\n```", "int top(int a)");
  CHECK(status == ExtractionStatus::Ok);
  CHECK(code == "int top(int a){return a;}");
}

TEST_CASE("extract_code on empty input reports no_code_block") {
  auto [code, status] = extract_code("", "int top(int a)");
  CHECK(status == ExtractionStatus::NoCodeBlock);
  CHECK(code.empty());
}

TEST_CASE("extract_code keeps the block when the signature is absent") {
  std::string raw = "Sure! Here is some code:\n```cpp\nint other(){return 1;}\n```\n";
  auto [code, status] = extract_code(raw, "int top(int a)");
  CHECK(status == ExtractionStatus::SignatureMissing);
  CHECK(code == "int other(){return 1;}");
}

TEST_CASE("extract_code concatenates C-family blocks and skips others") {
  std::string raw =
      "```cpp\nint top(int a){\n```\nand the rest:\n```\nreturn a;}\n```\n"
      "```yaml\nunroll_factor: [2]\n```\n";
  auto [code, status] = extract_code(raw, "int top(int a)");
  CHECK(status == ExtractionStatus::Ok);
  CHECK(contains(code, "int top(int a){"));
  CHECK(contains(code, "return a;}"));
  CHECK(!contains(code, "unroll_factor"));
}

TEST_CASE("extract_code treats a yaml-only response as no code") {
  auto [code, status] = extract_code("```yaml\nunroll_factor: [2]\n```\n", "int top(int a)");
  CHECK(status == ExtractionStatus::NoCodeBlock);
  CHECK(code.empty());
}

TEST_CASE("extract_code accepts fence-free bare code") {
  auto [code, status] = extract_code("  int top(int a){return a;}\n", "int top(int a)");
  CHECK(status == ExtractionStatus::Ok);
  CHECK(code == "int top(int a){return a;}");
}

TEST_CASE("extract_code is idempotent") {
  std::mt19937_64 rng(20240811);
  const std::string sig = "int top(int a)";
  const char* snippets[] = {"int top(int a){return a;}", "int other(){return 9;}",
                            "// a comment\nint top(int a){ return a + 1; }"};
  const char* tags[] = {"", "cpp", "c++", "text"};
  for (int trial = 0; trial < 64; ++trial) {
    std::string raw;
    int blocks = static_cast<int>(rng() % 3);
    if (rng() % 2) raw += "Some explanation first.\n";
    for (int b = 0; b < blocks; ++b) {
      raw += "```";
      raw += tags[rng() % 4];
      raw += "\n";
      raw += snippets[rng() % 3];
      raw += "\n```\n";
    }
    if (blocks == 0) raw += snippets[rng() % 3];

    auto [once, status1] = extract_code(raw, sig);
    auto [twice, status2] = extract_code(once, sig);
    CHECK(once == twice);
    if (status1 != ExtractionStatus::NoCodeBlock) CHECK(status1 == status2);
  }
}

TEST_CASE("cache_key separates temperature and sample index") {
  std::string a = cache_key("m", "p", 0, 0.0);
  CHECK(a == cache_key("m", "p", 0, 0.0));
  CHECK(a != cache_key("m", "p", 1, 0.0));
  CHECK(a != cache_key("m", "p", 0, 0.8));
  CHECK(a != cache_key("m2", "p", 0, 0.0));
  CHECK(a.size() == 64);
}

namespace {

ModelConfig replay_config(const fs::path& cache_dir) {
  ModelConfig cfg;
  cfg.model_id = "test-model";
  cfg.endpoint_kind = EndpointKind::ReplayCache;
  cfg.temperature = 0.0;
  cfg.api_params["cache_dir"] = cache_dir.string();
  return cfg;
}

void seed_cache(const fs::path& cache_dir, const BenchmarkTask& task, const ModelConfig& cfg,
                int count) {
  ResponseCache cache(cache_dir);
  const std::string prompt = render_codegen_prompt(task);
  for (int j = 0; j < count; ++j) {
    std::string response = "```cpp\n" + task.reference_source + "\n```\n";
    response += "<!-- sample " + std::to_string(j) + " -->\n";
    cache.store(cache_key(cfg.model_id, prompt, j, cfg.temperature), response, cfg.model_id,
                task.id, j, cfg.temperature);
  }
}

}  // namespace

TEST_CASE("replay cache returns stored responses byte-identically") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  TempDir tmp("cache");
  ModelConfig cfg = replay_config(tmp / "cache");
  seed_cache(tmp / "cache", task, cfg, 10);

  std::vector<Candidate> first = sample_candidates(task, cfg, 10);
  std::vector<Candidate> second = sample_candidates(task, cfg, 10);
  REQUIRE(first.size() == 10);
  for (int j = 0; j < 10; ++j) {
    CHECK(first[j].sample_index == j);
    CHECK(first[j].raw_response == second[j].raw_response);
    CHECK(first[j].extraction_status == ExtractionStatus::Ok);
    CHECK(contains(first[j].raw_response, "sample " + std::to_string(j)));
  }
}

TEST_CASE("replay cache miss names the missing sample index") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  TempDir tmp("cache-miss");
  ModelConfig cfg = replay_config(tmp / "cache");
  seed_cache(tmp / "cache", task, cfg, 3);

  try {
    sample_candidates(task, cfg, 5);
    FAIL("expected CacheMiss");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CacheMiss);
    CHECK(contains(e.what(), "sample_index 3"));
  }
}

TEST_CASE("local_command backend returns the command output") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  TempDir tmp("stub");
  fs::path script = tmp / "stub.sh";
  write_file(script,
             "#!/bin/sh\ncat > /dev/null\n"
             "echo '```cpp'\necho 'void vec_add(const int a[16], const int b[16], int "
             "out[16]) {}'\necho '```'\n");
  fs::permissions(script, fs::perms::owner_all);

  ModelConfig cfg;
  cfg.model_id = "stub";
  cfg.endpoint_kind = EndpointKind::LocalCommand;
  cfg.api_params["command"] = script.string();
  cfg.api_params["cache_dir"] = (tmp / "cache").string();

  std::vector<Candidate> candidates = sample_candidates(task, cfg, 1);
  REQUIRE(candidates.size() == 1);
  CHECK(candidates[0].extraction_status == ExtractionStatus::Ok);
  CHECK(contains(candidates[0].raw_response, "vec_add"));

  // the recorded response now replays without the command
  ModelConfig replay = cfg;
  replay.endpoint_kind = EndpointKind::ReplayCache;
  replay.api_params.erase("command");
  std::vector<Candidate> replayed = sample_candidates(task, replay, 1);
  REQUIRE(replayed.size() == 1);
  CHECK(replayed[0].raw_response == candidates[0].raw_response);
}

TEST_CASE("failing local command is BackendUnavailable") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  TempDir tmp("stub-fail");
  fs::path script = tmp / "fail.sh";
  write_file(script, "#!/bin/sh\nexit 7\n");
  fs::permissions(script, fs::perms::owner_all);

  ModelConfig cfg;
  cfg.model_id = "stub";
  cfg.endpoint_kind = EndpointKind::LocalCommand;
  cfg.api_params["command"] = script.string();

  try {
    sample_candidates(task, cfg, 1);
    FAIL("expected BackendUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BackendUnavailable);
  }
}

TEST_CASE("unreachable http endpoint is BackendUnavailable") {
  Corpus corpus = load_corpus(fixture_dir() / "corpus");
  const BenchmarkTask& task = corpus.tasks[0];
  ModelConfig cfg;
  cfg.model_id = "remote";
  cfg.endpoint_kind = EndpointKind::HttpApi;
  cfg.api_params["endpoint_url"] = "http://127.0.0.1:9/v1/completions";

  try {
    sample_candidates(task, cfg, 1);
    FAIL("expected BackendUnavailable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BackendUnavailable);
  }
}

TEST_SUITE_END();
