#include <cstring>
#include <sstream>

#include "hlsbench/errors.hpp"
#include "hlsbench/subprocess.hpp"
#include "hlsbench/toolchain.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

namespace {

StageRecord run_tool_script(const fs::path& binary, const std::vector<std::string>& args,
                            const Workspace& ws, StageId stage, double timeout_s) {
  StageRecord record;
  record.stage = stage;
  record.log_path = ws.dir / (std::string(stage_name(stage)) + ".log");

  SubprocessSpec spec;
  spec.argv.push_back(binary.string());
  spec.argv.insert(spec.argv.end(), args.begin(), args.end());
  spec.cwd = ws.dir;
  spec.stdout_path = record.log_path;
  spec.timeout_s = timeout_s;

  SubprocessResult res = run_subprocess(spec);
  record.wall_time_s = res.wall_time_s;
  if (res.spawn_failed) {
    record.status = StageStatus::ToolError;
    write_file(record.log_path, "tool binary unavailable: " + binary.string() + " (" +
                                    res.spawn_error + ")\n");
  } else if (res.timed_out) {
    record.status = StageStatus::Timeout;
  } else {
    record.status = res.exit_code == 0 ? StageStatus::Pass : StageStatus::Fail;
  }
  return record;
}

std::string tcl_directives(const DirectiveSet& directives, const std::string& top) {
  std::ostringstream out;
  for (const Directive& d : directives) {
    switch (d.kind) {
      case DirectiveKind::Clock:
        out << "create_clock -period " << d.args.at("period_ns") << " -name default\n";
        break;
      case DirectiveKind::Pipeline:
        out << "set_directive_pipeline -II " << d.args.at("ii") << " \"" << top << "\"\n";
        break;
      case DirectiveKind::Dataflow:
        out << "set_directive_dataflow \"" << top << "\"\n";
        break;
      case DirectiveKind::Unroll:
        out << "set_directive_unroll -factor " << d.args.at("factor") << " \"" << top
            << "\"\n";
        break;
      case DirectiveKind::ArrayPartition:
        out << "set_directive_array_partition -factor " << d.args.at("factor")
            << " -type cyclic \"" << top << "\"\n";
        break;
      case DirectiveKind::AllocationLimit:
        out << "set_directive_allocation -limit " << d.args.at("limit")
            << " -type operation \"" << top << "\" " << d.args.at("op") << "\n";
        break;
      case DirectiveKind::DspReg:
        out << "config_dsp -full_reg\n";
        break;
      case DirectiveKind::BackendStrategy:
        // consumed by the implementation script
        break;
    }
  }
  return out.str();
}

std::string strategy_of(const DsePoint& point) {
  return backend_strategy_name(point.backend_strategy);
}

// Extra script templates receive {sources}, {top_function}, {part},
// {clock_period_ns}, {directives} and {strategy}.
std::string fill_template(std::string text, const Workspace& ws, const std::string& top,
                          const DsePoint& point, const std::string& directives) {
  std::string sources;
  for (const fs::path& src : ws.sources) {
    if (!sources.empty()) sources += ' ';
    sources += src.filename().string();
  }
  const std::pair<const char*, std::string> slots[] = {
      {"{sources}", sources},
      {"{top_function}", top},
      {"{part}", ws.target_part},
      {"{clock_period_ns}", format_double(point.clock_period_ns)},
      {"{directives}", directives},
      {"{strategy}", strategy_of(point)},
  };
  for (const auto& [token, value] : slots) {
    std::size_t pos = 0;
    while ((pos = text.find(token, pos)) != std::string::npos) {
      text.replace(pos, std::strlen(token), value);
      pos += value.size();
    }
  }
  return text;
}

// Vitis HLS front end (csim/csynth/cosim) plus a Vivado implementation
// script, driven one stage per TCL file.
class VitisAdapter final : public Adapter {
 public:
  explicit VitisAdapter(AdapterConfig cfg) : cfg_(std::move(cfg)) {
    if (!cfg_.tool_binary) cfg_.tool_binary = "vitis_hls";
    if (!cfg_.backend_binary) cfg_.backend_binary = "vivado";
  }

  AdapterDescriptor descriptor() const override {
    return {"vitis",
            {StageId::Compile, StageId::CSim, StageId::Synth, StageId::Impl},
            cfg_.tool_binary};
  }

  ReportFormat report_format() const override { return ReportFormat::VitisXml; }

  void render_scripts(const Workspace& ws, const BenchmarkTask& task,
                      const DsePoint& point) const override {
    const std::string top = task.top_function_name();
    const DirectiveSet directives = render_directives(point);

    std::ostringstream common;
    common << "open_project -reset proj_" << top << "\n";
    common << "set_top " << top << "\n";
    common << "add_files design.cpp\n";
    common << "add_files -tb testbench.cpp\n";
    common << "open_solution -reset sol1\n";
    common << "set_part {" << ws.target_part << "}\n";
    const std::string directive_tcl = tcl_directives(directives, top);
    common << directive_tcl;
    if (cfg_.script_template) {
      common << fill_template(read_file(*cfg_.script_template), ws, top, point,
                              directive_tcl);
    }

    write_file(ws.dir / "hls_common.tcl", common.str());
    write_file(ws.dir / "compile.tcl", "source hls_common.tcl\ncsim_design -setup\nexit\n");
    write_file(ws.dir / "csim.tcl", "source hls_common.tcl\ncsim_design\nexit\n");
    write_file(ws.dir / "synth.tcl",
               "source hls_common.tcl\ncsynth_design\ncosim_design\n"
               "export_design -format ip_catalog -output export\nexit\n");

    std::ostringstream impl;
    impl << "set STRATEGY " << strategy_of(point) << "\n";
    impl << "open_project proj_" << top << "\n";
    impl << "read_verilog [glob proj_" << top << "/sol1/syn/verilog/*.v]\n";
    impl << "synth_design -mode out_of_context -top " << top << " -part " << ws.target_part
         << " -directive $STRATEGY\n";
    impl << "place_design\nroute_design\n";
    impl << "report_timing_summary -file impl_timing.rpt\n";
    impl << "report_power -file impl_power.rpt\n";
    impl << "report_utilization -file impl_util.rpt\n";
    impl << "exit\n";
    write_file(ws.dir / "impl.tcl", impl.str());
  }

  StageRecord execute(const Workspace& ws, StageId stage, double timeout_s) const override {
    fs::path binary = stage == StageId::Impl ? *cfg_.backend_binary : *cfg_.tool_binary;
    std::vector<std::string> args;
    if (stage == StageId::Impl) {
      args = {"-mode", "batch", "-source", "impl.tcl"};
    } else {
      args = {"-f", std::string(stage_name(stage)) + ".tcl"};
      if (stage == StageId::Synth) args[1] = "synth.tcl";
    }
    StageRecord record = run_tool_script(binary, args, ws, stage, timeout_s);
    if (record.status == StageStatus::Pass) {
      if (stage == StageId::Synth) {
        // csynth.xml location inside the generated project tree
        for (const auto& entry : fs::recursive_directory_iterator(ws.dir)) {
          if (entry.path().filename() == "csynth.xml") {
            record.report_paths.push_back(entry.path());
          }
        }
      } else if (stage == StageId::Impl) {
        record.report_paths = {ws.dir / "impl_timing.rpt", ws.dir / "impl_power.rpt",
                               ws.dir / "impl_util.rpt"};
      }
    }
    return record;
  }

 private:
  AdapterConfig cfg_;
};

// Catapult HLS front end; implementation is left to a downstream flow.
class CatapultAdapter final : public Adapter {
 public:
  explicit CatapultAdapter(AdapterConfig cfg) : cfg_(std::move(cfg)) {
    if (!cfg_.tool_binary) cfg_.tool_binary = "catapult";
  }

  AdapterDescriptor descriptor() const override {
    return {"catapult", {StageId::Compile, StageId::CSim, StageId::Synth}, cfg_.tool_binary};
  }

  ReportFormat report_format() const override { return ReportFormat::GenericKv; }

  void render_scripts(const Workspace& ws, const BenchmarkTask& task,
                      const DsePoint& point) const override {
    const std::string top = task.top_function_name();
    std::ostringstream common;
    common << "solution new -state initial\n";
    common << "solution file add design.cpp\n";
    common << "solution file add testbench.cpp -exclude true\n";
    common << "directive set -DESIGN_HIERARCHY " << top << "\n";
    common << "directive set -CLOCK_PERIOD " << format_double(point.clock_period_ns) << "\n";
    if (point.enable_pipeline) {
      common << "directive set /" << top << "/core -PIPELINE_INIT_INTERVAL "
             << point.pipeline_ii << "\n";
    }
    if (point.unroll_factor != 1) {
      common << "directive set /" << top << "/core -UNROLL " << point.unroll_factor << "\n";
    }
    if (cfg_.script_template) {
      common << fill_template(read_file(*cfg_.script_template), ws, top, point,
                              tcl_directives(render_directives(point), top));
    }
    write_file(ws.dir / "catapult_common.tcl", common.str());
    write_file(ws.dir / "compile.tcl", "source catapult_common.tcl\ngo analyze\nexit\n");
    write_file(ws.dir / "csim.tcl", "source catapult_common.tcl\ngo compile\nflow run /SCVerify/launch_make ./scverify/Verify_orig_cxx_osci.mk {} SIMTOOL=osci sim\nexit\n");
    write_file(ws.dir / "synth.tcl", "source catapult_common.tcl\ngo extract\nexit\n");
  }

  StageRecord execute(const Workspace& ws, StageId stage, double timeout_s) const override {
    std::vector<std::string> args = {"-shell", "-file",
                                     std::string(stage_name(stage)) + ".tcl"};
    return run_tool_script(*cfg_.tool_binary, args, ws, stage, timeout_s);
  }

 private:
  AdapterConfig cfg_;
};

}  // namespace

std::unique_ptr<Adapter> make_vitis_adapter(const AdapterConfig& cfg) {
  return std::make_unique<VitisAdapter>(cfg);
}

std::unique_ptr<Adapter> make_catapult_adapter(const AdapterConfig& cfg) {
  return std::make_unique<CatapultAdapter>(cfg);
}

std::unique_ptr<Adapter> make_adapter(const AdapterConfig& cfg) {
  if (cfg.name == "mock") return make_mock_adapter(cfg);
  if (cfg.name == "vitis") return make_vitis_adapter(cfg);
  if (cfg.name == "catapult") return make_catapult_adapter(cfg);
  throw Error(Errc::ConfigError, "unknown adapter: " + cfg.name);
}

}  // namespace hlsbench
