#include <doctest.h>

#include "hlsbench/errors.hpp"
#include "hlsbench/run_config.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::TempDir;

TEST_SUITE_BEGIN("run_config");

TEST_CASE("config file loads with nested blocks") {
  TempDir tmp("cfg");
  write_file(tmp / "hlsbench.yaml",
             "corpus: /data/corpus\n"
             "adapter: vitis\n"
             "model: some-model\n"
             "backend: http_api\n"
             "endpoint_url: http://localhost:8000/v1\n"
             "api_key_env: MY_KEY\n"
             "k: 5\n"
             "jobs: 3\n"
             "part: xc7k70t\n"
             "out: results\n"
             "policy:\n"
             "  mode: capped\n"
             "  max_points: 64\n"
             "timeouts:\n"
             "  synth_s: 1800\n");
  RunConfig cfg = load_run_config(tmp / "hlsbench.yaml");
  CHECK(cfg.corpus_path == fs::path("/data/corpus"));
  CHECK(cfg.adapter_name == "vitis");
  CHECK(cfg.backend == "http_api");
  CHECK(cfg.api_params.at("endpoint_url") == "http://localhost:8000/v1");
  CHECK(cfg.k == 5);
  CHECK(cfg.jobs == 3);
  CHECK(cfg.target_part == "xc7k70t");
  CHECK(cfg.policy.mode == PolicyMode::Capped);
  CHECK(cfg.policy.max_points == 64);
  CHECK(cfg.policy_explicit);
  CHECK(cfg.timeouts.synth_s == doctest::Approx(1800));
  CHECK(cfg.timeouts.compile_s == doctest::Approx(120));  // untouched default
}

TEST_CASE("temperature defaults depend on k") {
  RunConfig cfg;
  cfg.k = 1;
  CHECK(effective_temperature(cfg) == doctest::Approx(0.0));
  cfg.k = 10;
  CHECK(effective_temperature(cfg) == doctest::Approx(0.8));
  cfg.temperature = 0.3;
  CHECK(effective_temperature(cfg) == doctest::Approx(0.3));
}

TEST_CASE("model config gets a cache dir under the output root by default") {
  RunConfig cfg;
  cfg.output_dir = "myout";
  ModelConfig m = model_config_from(cfg);
  CHECK(m.api_params.at("cache_dir") == (fs::path("myout") / "cache").string());
}

TEST_CASE("policy block in the dse defaults file applies unless overridden") {
  TempDir tmp("cfg-policy");
  write_file(tmp / "dse.yaml",
             "unroll_factor: [1, 2, 4]\n"
             "policy:\n"
             "  mode: random\n"
             "  seed: 11\n"
             "  max_points: 2\n");
  RunConfig cfg;
  cfg.dse_defaults_path = tmp / "dse.yaml";

  ExplorationPolicy from_file = policy_from(cfg);
  CHECK(from_file.mode == PolicyMode::Random);
  CHECK(from_file.seed == 11);
  CHECK(from_file.max_points == 2);

  cfg.policy_explicit = true;
  cfg.policy.mode = PolicyMode::Exhaustive;
  CHECK(policy_from(cfg).mode == PolicyMode::Exhaustive);
}

TEST_SUITE_END();
