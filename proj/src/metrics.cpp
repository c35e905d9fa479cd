#include "hlsbench/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "hlsbench/errors.hpp"

namespace hlsbench {

const char* pass_kind_name(PassKind k) {
  switch (k) {
    case PassKind::Compilation: return "compilation";
    case PassKind::Simulation: return "simulation";
    case PassKind::Synthesis: return "synthesis";
  }
  return "compilation";
}

void PassMatrix::validate() const {
  if (rows.empty()) return;
  const std::size_t k = rows.front().size();
  if (k == 0) throw Error(Errc::DomainViolation, "PassMatrix requires K >= 1");
  for (const auto& row : rows) {
    if (row.size() != k) throw Error(Errc::DomainViolation, "PassMatrix is not rectangular");
  }
}

double pass_at_k(const PassMatrix& m, int k) {
  m.validate();
  if (m.rows.empty()) {
    if (k < 1) throw Error(Errc::KOutOfRange, "k must be >= 1");
    return 0.0;
  }
  if (k < 1 || k > m.k()) {
    throw Error(Errc::KOutOfRange,
                "k=" + std::to_string(k) + " outside [1, " + std::to_string(m.k()) + "]");
  }
  std::size_t passing = 0;
  for (const auto& row : m.rows) {
    for (int j = 0; j < k; ++j) {
      if (row[static_cast<std::size_t>(j)]) {
        ++passing;
        break;
      }
    }
  }
  return static_cast<double>(passing) / static_cast<double>(m.rows.size());
}

const char* delta_metric_name(DeltaMetric m) {
  switch (m) {
    case DeltaMetric::Lut: return "lut";
    case DeltaMetric::Ff: return "ff";
    case DeltaMetric::Power: return "power";
    case DeltaMetric::Latency: return "latency";
  }
  return "lut";
}

DeltaMetric parse_delta_metric(const std::string& s) {
  if (s == "lut") return DeltaMetric::Lut;
  if (s == "ff") return DeltaMetric::Ff;
  if (s == "power") return DeltaMetric::Power;
  if (s == "latency") return DeltaMetric::Latency;
  throw Error(Errc::DomainViolation, "unknown delta metric: " + s);
}

namespace {

std::optional<double> metric_value(const PpaRecord& r, DeltaMetric m) {
  switch (m) {
    case DeltaMetric::Lut:
      return r.lut ? std::optional<double>(static_cast<double>(*r.lut)) : std::nullopt;
    case DeltaMetric::Ff:
      return r.ff ? std::optional<double>(static_cast<double>(*r.ff)) : std::nullopt;
    case DeltaMetric::Power: return r.power_mw;
    case DeltaMetric::Latency: return r.latency_ns;
  }
  return std::nullopt;
}

}  // namespace

DeltaRecord ppa_delta(const PpaRecord& gen, const PpaRecord& ref, DeltaMetric metric,
                      const std::string& task_id) {
  auto g = metric_value(gen, metric);
  auto r = metric_value(ref, metric);
  if (!g || !r) {
    throw Error(Errc::MetricAbsent, std::string(delta_metric_name(metric)) +
                                        " absent from " + (!g ? "generated" : "reference") +
                                        " record");
  }
  DeltaRecord out;
  out.task_id = task_id;
  out.metric = metric;
  if (*r == 0.0) {
    if (*g == 0.0) {
      out.delta_pct = 0.0;
    }
    // reference 0, generated > 0: undefined, delta stays absent
  } else {
    out.delta_pct = 100.0 * (*g - *r) / *r;
  }
  return out;
}

bool dse_improved(const PpaRecord& baseline, const PpaRecord& best, double threshold_pct) {
  static const DeltaMetric kMetrics[] = {DeltaMetric::Latency, DeltaMetric::Lut,
                                         DeltaMetric::Ff, DeltaMetric::Power};
  bool any_shared = false;
  for (DeltaMetric m : kMetrics) {
    auto b = metric_value(baseline, m);
    auto x = metric_value(best, m);
    if (!b || !x) continue;
    any_shared = true;
    if (*b <= 0) continue;  // relative improvement needs a positive baseline
    double improvement_pct = 100.0 * (*b - *x) / *b;
    if (improvement_pct >= threshold_pct) return true;
  }
  if (!any_shared) {
    throw Error(Errc::NoComparableMetric, "records share no PPA metric");
  }
  return false;
}

std::vector<std::string> pareto_frontier(const std::vector<ParetoPoint>& points) {
  // Sort so a point can only be dominated by an earlier one, then filter
  // against the accepted frontier.
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const ParetoPoint& pa = points[a];
    const ParetoPoint& pb = points[b];
    if (pa.latency_ns != pb.latency_ns) return pa.latency_ns < pb.latency_ns;
    if (pa.area != pb.area) return pa.area < pb.area;
    if (pa.power_mw != pb.power_mw) return pa.power_mw < pb.power_mw;
    return pa.point_id < pb.point_id;
  });

  auto dominates = [](const ParetoPoint& p, const ParetoPoint& q) {
    bool le = p.latency_ns <= q.latency_ns && p.area <= q.area && p.power_mw <= q.power_mw;
    bool lt = p.latency_ns < q.latency_ns || p.area < q.area || p.power_mw < q.power_mw;
    return le && lt;
  };

  std::vector<std::size_t> frontier;
  for (std::size_t idx : order) {
    bool dominated = false;
    for (std::size_t f : frontier) {
      if (dominates(points[f], points[idx])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) frontier.push_back(idx);
  }

  std::sort(frontier.begin(), frontier.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].latency_ns != points[b].latency_ns) {
      return points[a].latency_ns < points[b].latency_ns;
    }
    return points[a].point_id < points[b].point_id;
  });

  std::vector<std::string> ids;
  ids.reserve(frontier.size());
  for (std::size_t f : frontier) ids.push_back(points[f].point_id);
  return ids;
}

}  // namespace hlsbench
