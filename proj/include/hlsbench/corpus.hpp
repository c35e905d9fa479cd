#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hlsbench {

namespace fs = std::filesystem;

enum class ScaleTag { Small, Medium, Large };

const char* scale_tag_name(ScaleTag t);
ScaleTag parse_scale_tag(const std::string& s);

// One corpus triplet: natural-language instruction, reference HLS source and
// a self-checking testbench, plus the top-function signature used for gating.
struct BenchmarkTask {
  std::string id;  // directory name, design_NNN
  std::string instruction;
  std::string reference_source;
  std::string testbench_source;
  std::string top_function;  // full signature string
  ScaleTag scale_tag = ScaleTag::Small;
  std::optional<fs::path> dse_spec_path;
  fs::path dir;  // on-disk location; empty for synthetic tasks

  std::string top_function_name() const;
};

// Semantic equality; ignores on-disk locations.
bool operator==(const BenchmarkTask& a, const BenchmarkTask& b);

struct Corpus {
  fs::path root;
  std::vector<BenchmarkTask> tasks;  // ordered lexicographically by id
  std::string manifest_version = "1.0.0";
};

bool operator==(const Corpus& a, const Corpus& b);

enum class Severity { Warning, Error };

struct Finding {
  Severity severity;
  std::string code;
  std::string message;
};

using ValidationReport = std::vector<Finding>;

bool has_errors(const ValidationReport& findings);

// Task directory layout: design_NNN/{instruction.md, reference.cpp,
// testbench.cpp, meta.yaml, dse.yaml?}. meta.yaml keys: top_function
// (required), scale (small|medium|large, default small). An optional
// manifest.yaml at the corpus root carries a semver `version`; major
// versions other than 1 are rejected.
Corpus load_corpus(const fs::path& root);

// Mechanical checks behind the corpus invariants: complete triplet, id
// pattern, signature presence, testbench references the top function and
// follows the return-0 convention (warning).
ValidationReport validate_task(const BenchmarkTask& task);

// Fixture-authoring helper; inverse of load_corpus for valid corpora.
void write_corpus(const Corpus& corpus, const fs::path& root);

}  // namespace hlsbench
