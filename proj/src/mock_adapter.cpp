#include <chrono>

#include "hlsbench/errors.hpp"
#include "hlsbench/toolchain.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

namespace {

// Stand-in toolchain: runs the closed-form cost model in-process and emits
// the same artifacts a real adapter would (logs, generic key=value reports),
// so the full pipeline is exercised without licensed tools.
class MockAdapter final : public Adapter {
 public:
  explicit MockAdapter(AdapterConfig cfg) : cfg_(std::move(cfg)) {}

  AdapterDescriptor descriptor() const override {
    return {"mock",
            {StageId::Compile, StageId::CSim, StageId::Synth, StageId::Impl},
            std::nullopt};
  }

  ReportFormat report_format() const override { return ReportFormat::GenericKv; }

  void render_scripts(const Workspace& ws, const BenchmarkTask& task,
                      const DsePoint& point) const override {
    (void)point;
    write_file(ws.dir / "mock_profile.yaml", mock_profile_to_yaml(mock_profile_for_task(task)));
  }

  StageRecord execute(const Workspace& ws, StageId stage, double timeout_s) const override {
    (void)timeout_s;
    auto t0 = std::chrono::steady_clock::now();

    MockProfile profile =
        mock_profile_from_yaml(read_file(ws.dir / "mock_profile.yaml"));
    profile = apply_mock_source_overrides(profile, read_file(ws.dir / "design.cpp"));

    nlohmann::json meta = nlohmann::json::parse(read_file(ws.dir / "point.json"));
    DsePoint point = meta.at("point").get<DsePoint>();

    auto [statuses, ppa] = mock_evaluate(profile, point);
    StageRecord record;
    record.stage = stage;
    record.status = statuses.at(stage);

    std::string log;
    log += "mock " + std::string(stage_name(stage)) + " for " +
           meta.at("task_id").get<std::string>() + " point " + point.point_id() + "\n";
    log += "status: " + std::string(stage_status_name(record.status)) + "\n";
    record.log_path = ws.dir / (std::string(stage_name(stage)) + ".log");
    write_file(record.log_path, log);

    if (stage == StageId::Synth && record.status == StageStatus::Pass) {
      std::string report;
      report += "latency_cycles=" + std::to_string(*ppa.latency_cycles) + "\n";
      report += "clock_ns=" + format_double(point.clock_period_ns) + "\n";
      report += "lut=" + std::to_string(*ppa.lut) + "\n";
      report += "ff=" + std::to_string(*ppa.ff) + "\n";
      report += "dsp=" + std::to_string(*ppa.dsp) + "\n";
      report += "bram=" + std::to_string(*ppa.bram) + "\n";
      fs::path path = ws.dir / "synth_report.txt";
      write_file(path, report);
      record.report_paths.push_back(path);
    }

    if (stage == StageId::Impl &&
        (record.status == StageStatus::Pass || record.status == StageStatus::Fail)) {
      // Timing failures still leave reports behind, like a real P&R run.
      fs::path timing = ws.dir / "impl_timing.txt";
      write_file(timing, "wns_ns=" + format_double(*ppa.wns_ns) + "\nclock_ns=" +
                             format_double(point.clock_period_ns) + "\n");
      fs::path power = ws.dir / "impl_power.txt";
      write_file(power, "power_mw=" + format_double(*ppa.power_mw) + "\n");
      fs::path util = ws.dir / "impl_util.txt";
      write_file(util,
                 "lut=" + std::to_string(*ppa.lut) + "\nff=" + std::to_string(*ppa.ff) + "\n");
      record.report_paths = {timing, power, util};
    }

    record.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
  }

 private:
  AdapterConfig cfg_;
};

}  // namespace

std::unique_ptr<Adapter> make_mock_adapter(const AdapterConfig& cfg) {
  return std::make_unique<MockAdapter>(cfg);
}

}  // namespace hlsbench
