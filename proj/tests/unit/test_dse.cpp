#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "hlsbench/dse.hpp"
#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"
#include "test_support.hpp"

using namespace hlsbench;
using hlsbench::testing::fixture_dir;

namespace {

std::string listing_yaml() { return read_file(fixture_dir() / "dse" / "listing1.yaml"); }

ExplorationPolicy exhaustive(bool prune) {
  ExplorationPolicy p;
  p.prune_dependent = prune;
  return p;
}

}  // namespace

TEST_SUITE_BEGIN("dse");

TEST_CASE("bundled sweep spec parses with the expected list lengths") {
  DseSpec spec = parse_dse_spec(listing_yaml());
  CHECK(spec.clock_period_ns.size() == 2);
  CHECK(spec.enable_pipeline.size() == 2);
  CHECK(spec.pipeline_ii.size() == 2);
  CHECK(spec.enable_dataflow.size() == 2);
  CHECK(spec.unroll_factor.size() == 4);
  CHECK(spec.array_partition_factor.size() == 3);
  CHECK(spec.allocation_limit_add.size() == 3);
  CHECK(spec.dsp_full_reg.size() == 2);
  CHECK(spec.backend_strategy.size() == 3);
  CHECK(spec.unroll_factor == std::vector<int>{1, 2, 4, 8});
  CHECK(spec.backend_strategy[1] == BackendStrategy::PerformanceExplore);
}

TEST_CASE("empty spec defaults every key to a singleton") {
  DseSpec spec = parse_dse_spec("{}");
  CHECK(spec.product_size() == 1);
  CHECK(spec.clock_period_ns == std::vector<double>{10.0});
  CHECK(spec.pipeline_ii == std::vector<int>{1});
  CHECK(spec.allocation_limit_add == std::vector<int>{0});
  CHECK(spec.backend_strategy == std::vector<BackendStrategy>{BackendStrategy::Default});
}

TEST_CASE("domain violations are rejected") {
  CHECK_THROWS_AS(parse_dse_spec("unroll_factor: [0]"), Error);
  CHECK_THROWS_AS(parse_dse_spec("clock_period_ns: [-2.0]"), Error);
  CHECK_THROWS_AS(parse_dse_spec("pipeline_ii: [0]"), Error);
  CHECK_THROWS_AS(parse_dse_spec("allocation_limit_add: [-1]"), Error);
  CHECK_THROWS_AS(parse_dse_spec("not_a_dse_key: [1]"), Error);
  CHECK_THROWS_AS(parse_dse_spec("backend_strategy: [Fastest]"), Error);
  try {
    parse_dse_spec("unroll_factor: [0]");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DomainViolation);
  }
}

TEST_CASE("broken yaml is a syntax error") {
  try {
    parse_dse_spec("unroll_factor: [1, 2\n  nope");
    FAIL("expected YamlSyntax");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::YamlSyntax);
  }
}

TEST_CASE("strategy aliases cannot both be given") {
  CHECK_THROWS_AS(parse_dse_spec("backend_strategy: [Default]\nvivado_strategy: [Default]"),
                  Error);
}

TEST_CASE("sweep spec expands to the full product without pruning") {
  std::vector<DsePoint> points = expand(parse_dse_spec(listing_yaml()), exhaustive(false));
  CHECK(points.size() == 3456);

  std::unordered_set<std::string> ids;
  for (const DsePoint& p : points) ids.insert(p.point_id());
  CHECK(ids.size() == 3456);  // point ids collision-free over the space
}

TEST_CASE("pruning collapses ii for unpipelined points") {
  std::vector<DsePoint> points = expand(parse_dse_spec(listing_yaml()), exhaustive(true));
  CHECK(points.size() == 2592);
  for (const DsePoint& p : points) {
    if (!p.enable_pipeline) CHECK(p.pipeline_ii == 1);
  }
}

TEST_CASE("pruned set equals normalized deduplicated raw product") {
  DseSpec spec = parse_dse_spec(listing_yaml());
  std::vector<DsePoint> raw = expand(spec, exhaustive(false));
  std::vector<DsePoint> pruned = expand(spec, exhaustive(true));

  std::set<std::string> normalized;
  for (const DsePoint& p : raw) normalized.insert(p.normalized().point_id());
  std::set<std::string> pruned_ids;
  for (const DsePoint& p : pruned) pruned_ids.insert(p.point_id());
  CHECK(normalized == pruned_ids);
}

TEST_CASE("singleton spec expands to exactly one point") {
  std::vector<DsePoint> points = expand(DseSpec{}, exhaustive(true));
  REQUIRE(points.size() == 1);
  CHECK(points[0].point_id() == baseline_point().point_id());
}

TEST_CASE("unpruned expansion size equals the product of list lengths") {
  std::mt19937_64 rng(7113);
  for (int trial = 0; trial < 40; ++trial) {
    DseSpec spec;
    auto take = [&](auto& list, auto gen) {
      list.clear();
      std::size_t n = 1 + rng() % 3;
      for (std::size_t i = 0; i < n; ++i) list.push_back(gen(i));
    };
    take(spec.clock_period_ns, [&](std::size_t i) { return 2.0 + 1.5 * i; });
    take(spec.enable_pipeline, [&](std::size_t i) { return i % 2 == 0; });
    take(spec.pipeline_ii, [&](std::size_t i) { return static_cast<int>(i + 1); });
    take(spec.enable_dataflow, [&](std::size_t i) { return i % 2 == 1; });
    take(spec.unroll_factor, [&](std::size_t i) { return 1 << i; });
    take(spec.array_partition_factor, [&](std::size_t i) { return static_cast<int>(i * 2 + 1); });
    take(spec.allocation_limit_add, [&](std::size_t i) { return static_cast<int>(i); });
    take(spec.dsp_full_reg, [&](std::size_t i) { return i % 2 == 0; });
    spec.backend_strategy = {BackendStrategy::Default};

    std::vector<DsePoint> points = expand(spec, exhaustive(false));
    CHECK(points.size() == spec.product_size());
  }
}

TEST_CASE("capped policy keeps a prefix of the expansion order") {
  ExplorationPolicy capped;
  capped.mode = PolicyMode::Capped;
  capped.max_points = 10;
  DseSpec spec = parse_dse_spec(listing_yaml());
  std::vector<DsePoint> all = expand(spec, exhaustive(true));
  std::vector<DsePoint> some = expand(spec, capped);
  REQUIRE(some.size() == 10);
  for (std::size_t i = 0; i < some.size(); ++i) {
    CHECK(some[i].point_id() == all[i].point_id());
  }
}

TEST_CASE("seeded random sampling is reproducible") {
  ExplorationPolicy random_policy;
  random_policy.mode = PolicyMode::Random;
  random_policy.seed = 42;
  random_policy.max_points = 100;
  DseSpec spec = parse_dse_spec(listing_yaml());

  std::vector<DsePoint> first = expand(spec, random_policy);
  std::vector<DsePoint> second = expand(spec, random_policy);
  REQUIRE(first.size() == 100);
  REQUIRE(second.size() == 100);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].point_id() == second[i].point_id());
  }

  ExplorationPolicy other_seed = random_policy;
  other_seed.seed = 43;
  std::vector<DsePoint> third = expand(spec, other_seed);
  bool any_different = false;
  for (std::size_t i = 0; i < third.size(); ++i) {
    if (third[i].point_id() != first[i].point_id()) any_different = true;
  }
  CHECK(any_different);
}

TEST_CASE("policy prerequisites are validated") {
  ExplorationPolicy capped;
  capped.mode = PolicyMode::Capped;
  CHECK_THROWS_AS(capped.validate(), Error);

  ExplorationPolicy random_policy;
  random_policy.mode = PolicyMode::Random;
  CHECK_THROWS_AS(random_policy.validate(), Error);
}

TEST_CASE("policy block parses out of the spec file") {
  ExplorationPolicy p = parse_policy_block(
      "unroll_factor: [1, 2]\npolicy:\n  mode: random\n  seed: 9\n  max_points: 5\n");
  CHECK(p.mode == PolicyMode::Random);
  CHECK(p.seed == 9);
  CHECK(p.max_points == 5);

  ExplorationPolicy d = parse_policy_block("unroll_factor: [1, 2]\n");
  CHECK(d.mode == PolicyMode::Exhaustive);
}

TEST_CASE("all-defaults point renders only the clock directive") {
  DirectiveSet set = render_directives(baseline_point());
  REQUIRE(set.size() == 1);
  CHECK(set[0].kind == DirectiveKind::Clock);
  CHECK(set[0].args.at("period_ns") == "10");
}

TEST_CASE("non-default fields render in fixed order") {
  DsePoint p;
  p.clock_period_ns = 5.0;
  p.enable_pipeline = true;
  p.pipeline_ii = 2;
  p.unroll_factor = 4;
  DirectiveSet set = render_directives(p);
  REQUIRE(set.size() == 3);
  CHECK(set[0].kind == DirectiveKind::Clock);
  CHECK(set[0].args.at("period_ns") == "5");
  CHECK(set[1].kind == DirectiveKind::Pipeline);
  CHECK(set[1].args.at("ii") == "2");
  CHECK(set[2].kind == DirectiveKind::Unroll);
  CHECK(set[2].args.at("factor") == "4");
}

TEST_CASE("allocation limit zero means no allocation directive") {
  DsePoint p;
  p.allocation_limit_add = 0;
  for (const Directive& d : render_directives(p)) {
    CHECK(d.kind != DirectiveKind::AllocationLimit);
  }
  p.allocation_limit_add = 2;
  bool found = false;
  for (const Directive& d : render_directives(p)) {
    if (d.kind == DirectiveKind::AllocationLimit) {
      found = true;
      CHECK(d.args.at("limit") == "2");
      CHECK(d.args.at("op") == "add");
    }
  }
  CHECK(found);
}

TEST_CASE("point json round-trips") {
  DsePoint p;
  p.clock_period_ns = 3.3;
  p.enable_pipeline = true;
  p.pipeline_ii = 2;
  p.unroll_factor = 8;
  p.backend_strategy = BackendStrategy::AreaExplore;
  nlohmann::json j = p;
  DsePoint q = j.get<DsePoint>();
  CHECK(q == p);
  CHECK(q.point_id() == p.point_id());
}

TEST_SUITE_END();
