#include "hlsbench/report_emit.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

namespace {

const DeltaMetric kDeltaMetrics[] = {DeltaMetric::Lut, DeltaMetric::Ff, DeltaMetric::Power,
                                     DeltaMetric::Latency};

std::vector<int> report_ks(const RunReport& report) {
  std::vector<int> ks;
  for (int k : {1, 5, 10}) {
    if (k <= report.k) ks.push_back(k);
  }
  if (std::find(ks.begin(), ks.end(), report.k) == ks.end()) ks.push_back(report.k);
  std::sort(ks.begin(), ks.end());
  return ks;
}

// Lexicographic (latency, area, power) pick among synthesis-passing records
// of the first k samples.
const EvaluationRecord* best_within_k(const RunReport& report, const std::string& task_id,
                                      int k) {
  const double inf = std::numeric_limits<double>::infinity();
  const EvaluationRecord* best = nullptr;
  std::tuple<double, double, double, int, std::string> best_key{inf, inf, inf, 0, ""};
  for (const EvaluationRecord& rec : report.records) {
    if (rec.task_id != task_id || rec.sample_index < 0 || rec.sample_index >= k) continue;
    if (!rec.ppa) continue;
    auto synth = rec.stage_records.find(StageId::Synth);
    if (synth == rec.stage_records.end() || synth->second.status != StageStatus::Pass) {
      continue;
    }
    const PpaRecord& ppa = *rec.ppa;
    std::tuple<double, double, double, int, std::string> key{
        ppa.latency_ns.value_or(inf),
        (ppa.lut && ppa.ff) ? static_cast<double>(*ppa.lut + *ppa.ff) : inf,
        ppa.power_mw.value_or(inf), rec.sample_index, rec.point_id()};
    if (!best || key < best_key) {
      best = &rec;
      best_key = key;
    }
  }
  return best;
}

}  // namespace

std::vector<TaskDelta> compute_task_deltas(const RunReport& report) {
  std::vector<TaskDelta> out;
  for (const std::string& task_id : report.task_ids) {
    auto ref = report.reference_ppa.find(task_id);
    if (ref == report.reference_ppa.end()) continue;
    for (int k : report_ks(report)) {
      const EvaluationRecord* best = best_within_k(report, task_id, k);
      if (!best) continue;
      for (DeltaMetric metric : kDeltaMetrics) {
        try {
          DeltaRecord d = ppa_delta(*best->ppa, ref->second, metric, task_id);
          out.push_back({task_id, k, metric, d.delta_pct});
        } catch (const Error& e) {
          if (e.code() != Errc::MetricAbsent) throw;
        }
      }
    }
  }
  return out;
}

std::vector<TaskFrontier> compute_frontiers(const RunReport& report) {
  std::vector<TaskFrontier> out;
  for (const std::string& task_id : report.task_ids) {
    std::vector<ParetoPoint> points;
    for (const EvaluationRecord& rec : report.records) {
      if (rec.task_id != task_id || rec.sample_index < 0 || !rec.ppa) continue;
      const PpaRecord& ppa = *rec.ppa;
      if (!ppa.latency_ns || !ppa.lut || !ppa.ff || !ppa.power_mw) continue;
      // key candidate by sample to keep distinct samples of one point apart
      points.push_back({"s" + std::to_string(rec.sample_index) + "/" + rec.point_id(),
                        *ppa.latency_ns, static_cast<double>(*ppa.lut + *ppa.ff),
                        *ppa.power_mw});
    }
    if (points.empty()) continue;
    out.push_back({task_id, pareto_frontier(points)});
  }
  return out;
}

std::string pass_table_csv(const RunReport& report) {
  std::ostringstream csv;
  csv << "stage,k,rate\n";
  for (const auto& [stage, rates] : report.pass_at_k_summary) {
    for (const auto& [k, rate] : rates) {
      csv << stage << "," << k << "," << format_double(rate) << "\n";
    }
  }
  return csv.str();
}

std::string deltas_csv(const std::vector<TaskDelta>& deltas) {
  std::ostringstream csv;
  csv << "task_id,k,metric,delta_pct\n";
  for (const TaskDelta& d : deltas) {
    csv << d.task_id << "," << d.k << "," << delta_metric_name(d.metric) << ",";
    if (d.delta_pct) csv << format_double(*d.delta_pct);
    csv << "\n";
  }
  return csv.str();
}

std::string dse_improvement_csv(const RunReport& report) {
  std::ostringstream csv;
  csv << "model,improved,eligible,fraction\n";
  double fraction = report.dse_eligible > 0
                        ? static_cast<double>(report.dse_improved_count) / report.dse_eligible
                        : 0.0;
  csv << report.model_id << "," << report.dse_improved_count << "," << report.dse_eligible
      << "," << format_double(fraction) << "\n";
  return csv.str();
}

std::string power_per_design_csv(const RunReport& report) {
  std::ostringstream csv;
  csv << "task_id,model,power_mw\n";
  for (const std::string& task_id : report.task_ids) {
    const EvaluationRecord* best = best_within_k(report, task_id, report.k);
    if (!best || !best->ppa || !best->ppa->power_mw) continue;
    csv << task_id << "," << report.model_id << "," << format_double(*best->ppa->power_mw)
        << "\n";
  }
  return csv.str();
}

std::string pareto_csv(const RunReport& report) {
  std::ostringstream csv;
  csv << "task_id,point\n";
  for (const TaskFrontier& f : compute_frontiers(report)) {
    for (const std::string& id : f.point_ids) {
      csv << f.task_id << "," << id << "\n";
    }
  }
  return csv.str();
}

nlohmann::json report_json(const RunReport& report) {
  nlohmann::json deltas = nlohmann::json::array();
  for (const TaskDelta& d : compute_task_deltas(report)) {
    nlohmann::json row{{"task_id", d.task_id},
                       {"k", d.k},
                       {"metric", delta_metric_name(d.metric)}};
    if (d.delta_pct) {
      row["delta_pct"] = *d.delta_pct;
    } else {
      row["undefined"] = true;  // reference is zero, generated is not
    }
    deltas.push_back(row);
  }

  nlohmann::json frontiers = nlohmann::json::object();
  for (const TaskFrontier& f : compute_frontiers(report)) frontiers[f.task_id] = f.point_ids;

  return nlohmann::json{{"summary", summary_to_json(report)},
                        {"deltas", deltas},
                        {"pareto", frontiers},
                        {"delta_semantics", "relative percent: 100*(generated-reference)/reference"}};
}

std::vector<fs::path> emit_report_files(const RunReport& report, const fs::path& dir,
                                        EmitFormat format, bool plots) {
  fs::create_directories(dir);
  std::vector<fs::path> written;
  auto emit = [&](const fs::path& name, const std::string& content) {
    write_file_atomic(dir / name, content);
    written.push_back(dir / name);
  };

  if (format == EmitFormat::Json) {
    emit("report.json", report_json(report).dump(2) + "\n");
  } else {
    emit("pass_at_k.csv", pass_table_csv(report));
    emit("deltas.csv", deltas_csv(compute_task_deltas(report)));
    emit("pareto.csv", pareto_csv(report));
  }
  if (plots) {
    emit("fig_deltas_per_task.csv", deltas_csv(compute_task_deltas(report)));
    emit("fig_dse_improvement.csv", dse_improvement_csv(report));
    emit("fig_power_per_design.csv", power_per_design_csv(report));
  }
  return written;
}

std::string compare_runs_text(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  const std::vector<std::string> stages = {"compilation", "simulation", "synthesis"};
  for (const RunReport& r : reports) {
    out << r.model_id << " (run " << r.run_id << ", k=" << r.k << ")\n";
    for (const std::string& stage : stages) {
      auto it = r.pass_at_k_summary.find(stage);
      if (it == r.pass_at_k_summary.end()) continue;
      out << "  " << stage << ":";
      for (const auto& [k, rate] : it->second) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), " pass@%d=%.2f%%", k, rate * 100.0);
        out << buf;
      }
      out << "\n";
    }
    double fraction =
        r.dse_eligible > 0 ? static_cast<double>(r.dse_improved_count) / r.dse_eligible : 0.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "  dse_improved: %.1f%% (%d/%d)\n", fraction * 100.0,
                  r.dse_improved_count, r.dse_eligible);
    out << buf;
  }
  return out.str();
}

}  // namespace hlsbench
