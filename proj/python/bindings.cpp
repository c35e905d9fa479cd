#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "hlsbench/corpus.hpp"
#include "hlsbench/dse.hpp"
#include "hlsbench/engine.hpp"
#include "hlsbench/errors.hpp"
#include "hlsbench/gateway.hpp"
#include "hlsbench/metrics.hpp"
#include "hlsbench/prompts.hpp"
#include "hlsbench/reports.hpp"
#include "hlsbench/run_config.hpp"
#include "hlsbench/toolchain.hpp"

namespace py = pybind11;
namespace hb = hlsbench;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

hb::PpaRecord ppa_from_dict(const py::dict& d) {
  nlohmann::json j = nlohmann::json::object();
  for (auto item : d) {
    const std::string key = py::str(item.first);
    if (key == "power_source") {
      j[key] = py::cast<std::string>(item.second);
    } else if (key == "latency_cycles" || key == "lut" || key == "ff" || key == "dsp" ||
               key == "bram") {
      j[key] = py::cast<long>(item.second);
    } else {
      j[key] = py::cast<double>(item.second);
    }
  }
  return j.get<hb::PpaRecord>();
}

py::dict point_to_dict(const hb::DsePoint& p) {
  nlohmann::json j = p;
  return json_to_py(j);
}

}  // namespace

PYBIND11_MODULE(_hlsbench, m) {
  m.doc() = "Core operations of the HLS evaluation harness";

  py::register_exception<hb::Error>(m, "HlsbenchError");

  // ---- corpus ----
  py::class_<hb::BenchmarkTask>(m, "BenchmarkTask")
      .def(py::init<>())
      .def_readwrite("id", &hb::BenchmarkTask::id)
      .def_readwrite("instruction", &hb::BenchmarkTask::instruction)
      .def_readwrite("reference_source", &hb::BenchmarkTask::reference_source)
      .def_readwrite("testbench_source", &hb::BenchmarkTask::testbench_source)
      .def_readwrite("top_function", &hb::BenchmarkTask::top_function)
      .def("top_function_name", &hb::BenchmarkTask::top_function_name);

  m.def("load_corpus", [](const std::string& root) {
    hb::Corpus corpus = hb::load_corpus(root);
    py::list tasks;
    for (const hb::BenchmarkTask& t : corpus.tasks) tasks.append(t);
    return tasks;
  });

  m.def("validate_task", [](const hb::BenchmarkTask& task) {
    py::list findings;
    for (const hb::Finding& f : hb::validate_task(task)) {
      py::dict d;
      d["severity"] = f.severity == hb::Severity::Error ? "error" : "warning";
      d["code"] = f.code;
      d["message"] = f.message;
      findings.append(d);
    }
    return findings;
  });

  m.def("render_codegen_prompt", &hb::render_codegen_prompt);
  m.def("render_authoring_prompt",
        [](const std::string& kind, const std::map<std::string, std::string>& inputs) {
          return hb::render_authoring_prompt(hb::parse_authoring_prompt_kind(kind), inputs);
        });

  // ---- gateway ----
  m.def("extract_code", [](const std::string& raw, const std::string& signature) {
    auto [code, status] = hb::extract_code(raw, signature);
    return py::make_tuple(code, std::string(hb::extraction_status_name(status)));
  });
  m.def("cache_key", &hb::cache_key);

  // ---- dse ----
  m.def("parse_dse_spec", [](const std::string& yaml_text) {
    nlohmann::json j = hb::parse_dse_spec(yaml_text);
    return json_to_py(j);
  });
  m.def(
      "expand_dse",
      [](const std::string& yaml_text, const std::string& mode, py::object max_points,
         py::object seed, bool prune_dependent) {
        hb::DseSpec spec = hb::parse_dse_spec(yaml_text);
        hb::ExplorationPolicy policy;
        policy.mode = hb::parse_policy_mode(mode);
        if (!max_points.is_none()) policy.max_points = py::cast<int>(max_points);
        if (!seed.is_none()) policy.seed = py::cast<std::uint64_t>(seed);
        policy.prune_dependent = prune_dependent;
        py::list out;
        for (const hb::DsePoint& p : hb::expand(spec, policy)) out.append(point_to_dict(p));
        return out;
      },
      py::arg("yaml_text"), py::arg("mode") = "exhaustive", py::arg("max_points") = py::none(),
      py::arg("seed") = py::none(), py::arg("prune_dependent") = true);
  m.def("render_directives", [](const py::dict& point_dict) {
    nlohmann::json j = nlohmann::json::object();
    for (auto item : point_dict) {
      const std::string key = py::str(item.first);
      if (key == "point_id") continue;
      if (key == "backend_strategy") {
        j[key] = py::cast<std::string>(item.second);
      } else if (key == "clock_period_ns") {
        j[key] = py::cast<double>(item.second);
      } else if (key == "enable_pipeline" || key == "enable_dataflow" ||
                 key == "dsp_full_reg") {
        j[key] = py::cast<bool>(item.second);
      } else {
        j[key] = py::cast<int>(item.second);
      }
    }
    hb::DsePoint p = j.get<hb::DsePoint>();
    py::list out;
    for (const hb::Directive& d : hb::render_directives(p)) {
      py::dict row;
      row["kind"] = hb::directive_kind_name(d.kind);
      row["args"] = py::cast(d.args);
      out.append(row);
    }
    return out;
  });

  // ---- mock cost model ----
  m.def(
      "mock_evaluate",
      [](const py::dict& profile_dict, const py::dict& point_dict) {
        hb::MockProfile profile;
        if (profile_dict.contains("base_cycles")) {
          profile.base_cycles = py::cast<long>(profile_dict["base_cycles"]);
        }
        if (profile_dict.contains("base_lut")) {
          profile.base_lut = py::cast<long>(profile_dict["base_lut"]);
        }
        if (profile_dict.contains("base_ff")) {
          profile.base_ff = py::cast<long>(profile_dict["base_ff"]);
        }
        if (profile_dict.contains("base_dsp")) {
          profile.base_dsp = py::cast<long>(profile_dict["base_dsp"]);
        }
        if (profile_dict.contains("base_bram")) {
          profile.base_bram = py::cast<long>(profile_dict["base_bram"]);
        }
        if (profile_dict.contains("base_power_mw")) {
          profile.base_power_mw = py::cast<double>(profile_dict["base_power_mw"]);
        }
        if (profile_dict.contains("min_period_ns")) {
          profile.min_period_ns = py::cast<double>(profile_dict["min_period_ns"]);
        }
        if (profile_dict.contains("fail_at")) {
          profile.fail_at = hb::parse_stage(py::cast<std::string>(profile_dict["fail_at"]));
        }

        nlohmann::json pj = nlohmann::json::object();
        for (auto item : point_dict) {
          const std::string key = py::str(item.first);
          if (key == "point_id") continue;
          if (key == "backend_strategy") {
            pj[key] = py::cast<std::string>(item.second);
          } else if (key == "clock_period_ns") {
            pj[key] = py::cast<double>(item.second);
          } else if (key == "enable_pipeline" || key == "enable_dataflow" ||
                     key == "dsp_full_reg") {
            pj[key] = py::cast<bool>(item.second);
          } else {
            pj[key] = py::cast<int>(item.second);
          }
        }
        hb::DsePoint point;
        if (!pj.empty()) {
          nlohmann::json defaults = hb::DsePoint{};
          defaults.update(pj);
          point = defaults.get<hb::DsePoint>();
        }

        auto [statuses, ppa] = hb::mock_evaluate(profile, point);
        py::dict status_dict;
        for (const auto& [stage, status] : statuses) {
          status_dict[py::str(hb::stage_name(stage))] = hb::stage_status_name(status);
        }
        nlohmann::json ppa_json = ppa;
        return py::make_tuple(status_dict, json_to_py(ppa_json));
      },
      py::arg("profile") = py::dict(), py::arg("point") = py::dict());

  // ---- reports ----
  m.def("parse_hls_synth_report", [](const std::string& text, const std::string& format) {
    nlohmann::json j = hb::parse_hls_synth_report(text, hb::parse_report_format(format));
    return json_to_py(j);
  });
  m.def("parse_impl_report",
        [](const std::string& timing, const std::string& power, const std::string& util,
           const std::string& format) {
          nlohmann::json j =
              hb::parse_impl_report(timing, power, util, hb::parse_report_format(format));
          return json_to_py(j);
        });
  m.def("merge_ppa", [](const py::dict& synth, const py::dict& impl) {
    nlohmann::json j = hb::merge_ppa(ppa_from_dict(synth), ppa_from_dict(impl));
    return json_to_py(j);
  });

  // ---- metrics ----
  m.def("pass_at_k", [](const std::vector<std::vector<bool>>& rows, int k) {
    hb::PassMatrix matrix;
    matrix.rows = rows;
    return hb::pass_at_k(matrix, k);
  });
  m.def("ppa_delta", [](const py::dict& gen, const py::dict& ref, const std::string& metric) {
    hb::DeltaRecord d =
        hb::ppa_delta(ppa_from_dict(gen), ppa_from_dict(ref), hb::parse_delta_metric(metric));
    return d.delta_pct ? py::object(py::float_(*d.delta_pct)) : py::object(py::none());
  });
  m.def(
      "dse_improved",
      [](const py::dict& baseline, const py::dict& best, double threshold_pct) {
        return hb::dse_improved(ppa_from_dict(baseline), ppa_from_dict(best), threshold_pct);
      },
      py::arg("baseline"), py::arg("best"), py::arg("threshold_pct") = 20.0);
  m.def("pareto_frontier",
        [](const std::vector<std::tuple<std::string, double, double, double>>& rows) {
          std::vector<hb::ParetoPoint> points;
          points.reserve(rows.size());
          for (const auto& [id, latency, area, power] : rows) {
            points.push_back({id, latency, area, power});
          }
          return hb::pareto_frontier(points);
        });

  // ---- engine ----
  m.def(
      "run_mock_benchmark",
      [](const std::string& corpus_path, const std::string& cache_dir,
         const std::string& model_id, int k, const std::string& out_dir,
         const std::string& run_id, int jobs, const std::string& dse_defaults_yaml) {
        hb::Corpus corpus = hb::load_corpus(corpus_path);
        hb::ModelConfig model;
        model.model_id = model_id;
        model.endpoint_kind = hb::EndpointKind::ReplayCache;
        model.api_params["cache_dir"] = cache_dir;
        hb::DseSpec defaults = dse_defaults_yaml.empty()
                                   ? hb::DseSpec{}
                                   : hb::parse_dse_spec(dse_defaults_yaml);
        hb::ExplorationPolicy policy;
        hb::AdapterConfig adapter_cfg;
        std::unique_ptr<hb::Adapter> adapter = hb::make_adapter(adapter_cfg);
        hb::EngineConfig engine_cfg;
        engine_cfg.output_dir = out_dir;
        engine_cfg.run_id = run_id;
        engine_cfg.jobs = jobs;
        hb::RunReport report =
            hb::run_benchmark(corpus, model, defaults, policy, *adapter, k, engine_cfg);
        return json_to_py(hb::summary_to_json(report));
      },
      py::arg("corpus_path"), py::arg("cache_dir"), py::arg("model_id") = "fixture-model",
      py::arg("k") = 1, py::arg("out_dir") = "out", py::arg("run_id") = "",
      py::arg("jobs") = 1, py::arg("dse_defaults_yaml") = "");

  m.attr("__version__") = "0.1.0";
}
