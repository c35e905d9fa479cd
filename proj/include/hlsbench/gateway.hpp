#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlsbench/corpus.hpp"

namespace hlsbench {

enum class EndpointKind { ReplayCache, HttpApi, LocalCommand };

EndpointKind parse_endpoint_kind(const std::string& s);
const char* endpoint_kind_name(EndpointKind k);

// api_params carries backend-specific settings:
//   cache_dir     response cache location (required for replay_cache)
//   command       local_command executable; gets the prompt on stdin and
//                 HLSBENCH_TASK_ID / HLSBENCH_SAMPLE_INDEX / HLSBENCH_MODEL_ID
//                 in the environment
//   endpoint_url  http_api URL
//   api_key_env   name of the environment variable holding the credential
struct ModelConfig {
  std::string model_id;
  EndpointKind endpoint_kind = EndpointKind::ReplayCache;
  double temperature = 0.0;
  int max_tokens = 4096;
  std::map<std::string, std::string> api_params;
};

void to_json(nlohmann::json& j, const ModelConfig& cfg);
void from_json(const nlohmann::json& j, ModelConfig& cfg);

enum class ExtractionStatus { Ok, NoCodeBlock, SignatureMissing };

const char* extraction_status_name(ExtractionStatus s);
ExtractionStatus parse_extraction_status(const std::string& s);

struct Candidate {
  std::string task_id;
  int sample_index = 0;
  std::string raw_response;
  std::optional<std::string> source;  // present iff extraction_status == Ok
  ExtractionStatus extraction_status = ExtractionStatus::NoCodeBlock;
};

// Hex digest of (model_id, prompt, sample_index, temperature); one cache
// file per key.
std::string cache_key(const std::string& model_id, const std::string& prompt,
                      int sample_index, double temperature);

// On-disk record/replay store. Responses are stored verbatim, one file per
// key, written atomically; an append-only index maps keys back to tasks.
class ResponseCache {
 public:
  explicit ResponseCache(fs::path dir);

  std::optional<std::string> lookup(const std::string& key) const;
  void store(const std::string& key, const std::string& response,
             const std::string& model_id, const std::string& task_id, int sample_index,
             double temperature);

  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
};

// Pulls source out of a raw model response. Fenced blocks tagged c/cpp (or
// untagged) win over everything else; a fence-free response is treated as
// bare code.
std::pair<std::string, ExtractionStatus> extract_code(const std::string& raw,
                                                      const std::string& expected_signature);

// Samples k candidates for the task. All backends read through the cache,
// so a populated cache replays byte-identically on any backend.
std::vector<Candidate> sample_candidates(const BenchmarkTask& task, const ModelConfig& cfg,
                                         int k);

}  // namespace hlsbench
