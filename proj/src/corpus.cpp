#include "hlsbench/corpus.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <regex>
#include <set>

#include "hlsbench/errors.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

namespace {

const std::regex kIdPattern("design_[0-9]+");

constexpr const char* kInstructionFile = "instruction.md";
constexpr const char* kReferenceFile = "reference.cpp";
constexpr const char* kTestbenchFile = "testbench.cpp";
constexpr const char* kMetaFile = "meta.yaml";
constexpr const char* kDseFile = "dse.yaml";
constexpr const char* kManifestFile = "manifest.yaml";

std::string require_file(const fs::path& dir, const char* name, const std::string& task_id,
                         const char* what) {
  fs::path p = dir / name;
  if (!fs::exists(p)) {
    throw Error(Errc::MissingFile, task_id + ": missing " + what + " (" + name + ")");
  }
  return read_file(p);
}

}  // namespace

const char* scale_tag_name(ScaleTag t) {
  switch (t) {
    case ScaleTag::Small: return "small";
    case ScaleTag::Medium: return "medium";
    case ScaleTag::Large: return "large";
  }
  return "small";
}

ScaleTag parse_scale_tag(const std::string& s) {
  if (s == "small") return ScaleTag::Small;
  if (s == "medium") return ScaleTag::Medium;
  if (s == "large") return ScaleTag::Large;
  throw Error(Errc::DomainViolation, "unknown scale tag: " + s);
}

std::string BenchmarkTask::top_function_name() const {
  return signature_function_name(top_function);
}

bool operator==(const BenchmarkTask& a, const BenchmarkTask& b) {
  return a.id == b.id && a.instruction == b.instruction &&
         a.reference_source == b.reference_source &&
         a.testbench_source == b.testbench_source && a.top_function == b.top_function &&
         a.scale_tag == b.scale_tag &&
         a.dse_spec_path.has_value() == b.dse_spec_path.has_value();
}

bool operator==(const Corpus& a, const Corpus& b) {
  return a.manifest_version == b.manifest_version && a.tasks == b.tasks;
}

bool has_errors(const ValidationReport& findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::Error; });
}

Corpus load_corpus(const fs::path& root) {
  if (!fs::exists(root) || !fs::is_directory(root)) {
    throw Error(Errc::IoError, "corpus root does not exist: " + root.string());
  }

  Corpus corpus;
  corpus.root = root;

  if (auto manifest = read_file_if_exists(root / kManifestFile)) {
    try {
      YAML::Node node = YAML::Load(*manifest);
      if (node["version"]) corpus.manifest_version = node["version"].as<std::string>();
    } catch (const YAML::Exception& e) {
      throw Error(Errc::YamlSyntax, "manifest.yaml: " + std::string(e.what()));
    }
    // Only major version 1 of the fixture format is understood.
    if (corpus.manifest_version.empty() || corpus.manifest_version[0] != '1' ||
        (corpus.manifest_version.size() > 1 && corpus.manifest_version[1] != '.')) {
      throw Error(Errc::ManifestVersion,
                  "unsupported corpus manifest version " + corpus.manifest_version);
    }
  }

  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    const std::string name = entry.path().filename().string();
    if (std::regex_match(name, kIdPattern)) dirs.push_back(entry.path());
  }
  std::sort(dirs.begin(), dirs.end());

  std::set<std::string> seen;
  for (const auto& dir : dirs) {
    BenchmarkTask task;
    task.id = dir.filename().string();
    task.dir = dir;
    if (!seen.insert(task.id).second) {
      throw Error(Errc::DuplicateId, task.id);
    }

    task.instruction = require_file(dir, kInstructionFile, task.id, "instruction");
    task.reference_source = require_file(dir, kReferenceFile, task.id, "reference");
    task.testbench_source = require_file(dir, kTestbenchFile, task.id, "testbench");
    std::string meta_text = require_file(dir, kMetaFile, task.id, "meta");

    try {
      YAML::Node meta = YAML::Load(meta_text);
      if (!meta["top_function"]) {
        throw Error(Errc::DomainViolation, task.id + ": meta.yaml lacks top_function");
      }
      task.top_function = meta["top_function"].as<std::string>();
      if (meta["scale"]) task.scale_tag = parse_scale_tag(meta["scale"].as<std::string>());
    } catch (const YAML::Exception& e) {
      throw Error(Errc::YamlSyntax, task.id + ": meta.yaml: " + std::string(e.what()));
    }

    if (!contains(normalize_signature(task.reference_source),
                  normalize_signature(task.top_function))) {
      throw Error(Errc::SignatureMismatch,
                  task.id + ": top function signature not found in reference source: " +
                      task.top_function);
    }

    if (fs::exists(dir / kDseFile)) task.dse_spec_path = dir / kDseFile;
    corpus.tasks.push_back(std::move(task));
  }
  return corpus;
}

ValidationReport validate_task(const BenchmarkTask& task) {
  ValidationReport findings;
  auto error = [&](const char* code, std::string msg) {
    findings.push_back({Severity::Error, code, std::move(msg)});
  };
  auto warning = [&](const char* code, std::string msg) {
    findings.push_back({Severity::Warning, code, std::move(msg)});
  };

  if (!std::regex_match(task.id, kIdPattern)) {
    error("BAD_ID", task.id + ": id does not match design_NNN");
  }
  if (trim(task.instruction).empty()) {
    error("EMPTY_INSTRUCTION", task.id + ": instruction is empty");
  }
  if (trim(task.reference_source).empty()) {
    error("EMPTY_REFERENCE", task.id + ": reference source is empty");
  }
  if (trim(task.testbench_source).empty()) {
    error("EMPTY_TESTBENCH", task.id + ": testbench source is empty");
  }
  if (trim(task.top_function).empty()) {
    error("EMPTY_SIGNATURE", task.id + ": top_function is empty");
  } else if (!contains(normalize_signature(task.reference_source),
                       normalize_signature(task.top_function))) {
    error("SIG_MISSING", task.id + ": reference source lacks the top function signature");
  }

  const std::string fn = task.top_function_name();
  if (!fn.empty() && !trim(task.testbench_source).empty()) {
    if (!contains(task.testbench_source, fn)) {
      error("TB_NO_CALL", task.id + ": testbench never references top function '" + fn + "'");
    }
    if (!contains(normalize_signature(task.testbench_source), "return 0")) {
      warning("TB_NO_RETURN0", task.id + ": testbench does not follow the return-0 convention");
    }
  }
  return findings;
}

void write_corpus(const Corpus& corpus, const fs::path& root) {
  std::set<std::string> seen;
  for (const auto& task : corpus.tasks) {
    if (!seen.insert(task.id).second) throw Error(Errc::DuplicateId, task.id);
  }

  fs::create_directories(root);
  write_file(root / kManifestFile, "version: \"" + corpus.manifest_version + "\"\n");
  for (const auto& task : corpus.tasks) {
    fs::path dir = root / task.id;
    fs::create_directories(dir);
    write_file(dir / kInstructionFile, task.instruction);
    write_file(dir / kReferenceFile, task.reference_source);
    write_file(dir / kTestbenchFile, task.testbench_source);

    YAML::Emitter meta;
    meta << YAML::BeginMap;
    meta << YAML::Key << "top_function" << YAML::Value << task.top_function;
    meta << YAML::Key << "scale" << YAML::Value << scale_tag_name(task.scale_tag);
    meta << YAML::EndMap;
    write_file(dir / kMetaFile, std::string(meta.c_str()) + "\n");

    if (task.dse_spec_path && fs::exists(*task.dse_spec_path)) {
      fs::copy_file(*task.dse_spec_path, dir / kDseFile,
                    fs::copy_options::overwrite_existing);
    }
  }
}

}  // namespace hlsbench
