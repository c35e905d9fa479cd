#include <doctest.h>

#include "hlsbench/report_emit.hpp"
#include "hlsbench/util.hpp"

using namespace hlsbench;

namespace {

RunReport empty_report() {
  RunReport r;
  r.run_id = "r0";
  r.model_id = "model-a";
  r.k = 2;
  r.adapter_name = "mock";
  r.target_part = "part";
  r.task_ids = {"design_001", "design_002"};
  r.pass_at_k_summary["compilation"] = {{1, 0.5}, {2, 1.0}};
  r.pass_at_k_summary["simulation"] = {{1, 0.5}, {2, 0.5}};
  r.pass_at_k_summary["synthesis"] = {{1, 0.0}, {2, 0.5}};
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("report_emit");

TEST_CASE("zero synth passes emit a header-only delta csv") {
  RunReport r = empty_report();
  std::string csv = deltas_csv(compute_task_deltas(r));
  CHECK(csv == "task_id,k,metric,delta_pct\n");
  CHECK(pareto_csv(r) == "task_id,point\n");
  CHECK(power_per_design_csv(r) == "task_id,model,power_mw\n");
}

TEST_CASE("pass table csv lists every stage and k") {
  std::string csv = pass_table_csv(empty_report());
  CHECK(contains(csv, "stage,k,rate"));
  CHECK(contains(csv, "compilation,1,0.5"));
  CHECK(contains(csv, "compilation,2,1"));
  CHECK(contains(csv, "synthesis,2,0.5"));
}

TEST_CASE("dse improvement csv degrades to zero fraction") {
  RunReport r = empty_report();
  CHECK(contains(dse_improvement_csv(r), "model-a,0,0,0"));
  r.dse_eligible = 4;
  r.dse_improved_count = 1;
  CHECK(contains(dse_improvement_csv(r), "model-a,1,4,0.25"));
}

TEST_CASE("side-by-side comparison lists every run") {
  RunReport a = empty_report();
  RunReport b = empty_report();
  b.run_id = "r1";
  b.model_id = "model-b";
  std::string text = compare_runs_text({a, b});
  CHECK(contains(text, "model-a (run r0, k=2)"));
  CHECK(contains(text, "model-b (run r1, k=2)"));
  CHECK(contains(text, "pass@1=50.00%"));
}

TEST_SUITE_END();
