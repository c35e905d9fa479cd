#include "hlsbench/gateway.hpp"

#include <fstream>
#include <regex>

#include <httplib.h>
#include <json.hpp>

#include "hlsbench/errors.hpp"
#include "hlsbench/prompts.hpp"
#include "hlsbench/subprocess.hpp"
#include "hlsbench/util.hpp"

namespace hlsbench {

EndpointKind parse_endpoint_kind(const std::string& s) {
  if (s == "replay_cache") return EndpointKind::ReplayCache;
  if (s == "http_api") return EndpointKind::HttpApi;
  if (s == "local_command") return EndpointKind::LocalCommand;
  throw Error(Errc::ConfigError, "unknown endpoint kind: " + s);
}

const char* endpoint_kind_name(EndpointKind k) {
  switch (k) {
    case EndpointKind::ReplayCache: return "replay_cache";
    case EndpointKind::HttpApi: return "http_api";
    case EndpointKind::LocalCommand: return "local_command";
  }
  return "replay_cache";
}

const char* extraction_status_name(ExtractionStatus s) {
  switch (s) {
    case ExtractionStatus::Ok: return "ok";
    case ExtractionStatus::NoCodeBlock: return "no_code_block";
    case ExtractionStatus::SignatureMissing: return "signature_missing";
  }
  return "no_code_block";
}

ExtractionStatus parse_extraction_status(const std::string& s) {
  if (s == "ok") return ExtractionStatus::Ok;
  if (s == "no_code_block") return ExtractionStatus::NoCodeBlock;
  if (s == "signature_missing") return ExtractionStatus::SignatureMissing;
  throw Error(Errc::ConfigError, "unknown extraction status: " + s);
}

void to_json(nlohmann::json& j, const ModelConfig& cfg) {
  j = nlohmann::json{{"model_id", cfg.model_id},
                     {"endpoint_kind", endpoint_kind_name(cfg.endpoint_kind)},
                     {"temperature", cfg.temperature},
                     {"max_tokens", cfg.max_tokens},
                     {"api_params", cfg.api_params}};
}

void from_json(const nlohmann::json& j, ModelConfig& cfg) {
  cfg = ModelConfig{};
  j.at("model_id").get_to(cfg.model_id);
  cfg.endpoint_kind = parse_endpoint_kind(j.at("endpoint_kind").get<std::string>());
  if (j.contains("temperature")) cfg.temperature = j["temperature"].get<double>();
  if (j.contains("max_tokens")) cfg.max_tokens = j["max_tokens"].get<int>();
  if (j.contains("api_params")) {
    cfg.api_params = j["api_params"].get<std::map<std::string, std::string>>();
  }
}

std::string cache_key(const std::string& model_id, const std::string& prompt,
                      int sample_index, double temperature) {
  std::string material;
  material += model_id;
  material += '\x1f';
  material += prompt;
  material += '\x1f';
  material += std::to_string(sample_index);
  material += '\x1f';
  material += format_double(temperature);
  return sha256_hex(material);
}

ResponseCache::ResponseCache(fs::path dir) : dir_(std::move(dir)) {
  fs::create_directories(dir_);
}

std::optional<std::string> ResponseCache::lookup(const std::string& key) const {
  return read_file_if_exists(dir_ / (key + ".txt"));
}

void ResponseCache::store(const std::string& key, const std::string& response,
                          const std::string& model_id, const std::string& task_id,
                          int sample_index, double temperature) {
  write_file_atomic(dir_ / (key + ".txt"), response);
  nlohmann::json meta{{"key", key},
                      {"model_id", model_id},
                      {"task_id", task_id},
                      {"sample_index", sample_index},
                      {"temperature", temperature}};
  std::ofstream index(dir_ / "cache_index.jsonl", std::ios::app);
  index << meta.dump() << "\n";
}

namespace {

bool is_fence(const std::string& line, std::string* tag) {
  std::string t = trim(line);
  if (t.rfind("```", 0) != 0) return false;
  if (tag) *tag = to_lower(trim(t.substr(3)));
  return true;
}

bool accepted_tag(const std::string& tag) {
  return tag.empty() || tag == "c" || tag == "cpp" || tag == "c++" || tag == "cxx" ||
         tag == "cc";
}

}  // namespace

std::pair<std::string, ExtractionStatus> extract_code(const std::string& raw,
                                                      const std::string& expected_signature) {
  std::vector<std::string> lines = split_lines(raw);
  std::vector<std::string> pieces;
  bool saw_fence = false;
  bool in_block = false;
  bool keep_block = false;
  std::string current;

  for (const std::string& line : lines) {
    std::string tag;
    if (is_fence(line, &tag)) {
      if (!in_block) {
        saw_fence = true;
        in_block = true;
        keep_block = accepted_tag(tag);
        current.clear();
      } else {
        if (keep_block && !trim(current).empty()) pieces.push_back(current);
        in_block = false;
      }
      continue;
    }
    if (in_block) {
      current += line;
      current += '\n';
    }
  }
  if (in_block && keep_block && !trim(current).empty()) pieces.push_back(current);

  std::string code;
  if (saw_fence) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i) code += '\n';
      code += pieces[i];
    }
  } else {
    code = raw;
  }
  code = trim(code);

  if (code.empty()) return {"", ExtractionStatus::NoCodeBlock};
  if (!expected_signature.empty() &&
      !contains(normalize_signature(code), normalize_signature(expected_signature))) {
    return {code, ExtractionStatus::SignatureMissing};
  }
  return {code, ExtractionStatus::Ok};
}

namespace {

std::string require_param(const ModelConfig& cfg, const std::string& key) {
  auto it = cfg.api_params.find(key);
  if (it == cfg.api_params.end() || it->second.empty()) {
    throw Error(Errc::ConfigError,
                std::string(endpoint_kind_name(cfg.endpoint_kind)) + " backend requires api_params." + key);
  }
  return it->second;
}

std::string invoke_local_command(const BenchmarkTask& task, const ModelConfig& cfg,
                                 const std::string& prompt, int sample_index) {
  const std::string command = require_param(cfg, "command");
  fs::path out_tmp = fs::temp_directory_path() /
                     ("hlsbench-resp-" + short_digest(command + task.id, 8) + "-" +
                      std::to_string(sample_index) + ".out");
  std::error_code ec;
  fs::remove(out_tmp, ec);

  SubprocessSpec spec;
  spec.argv = {command};
  spec.stdin_data = prompt;
  spec.stdout_path = out_tmp;
  spec.timeout_s = 300;
  spec.env["HLSBENCH_TASK_ID"] = task.id;
  spec.env["HLSBENCH_SAMPLE_INDEX"] = std::to_string(sample_index);
  spec.env["HLSBENCH_MODEL_ID"] = cfg.model_id;
  spec.env["HLSBENCH_TEMPERATURE"] = format_double(cfg.temperature);

  SubprocessResult res = run_subprocess(spec);
  if (res.spawn_failed) {
    throw Error(Errc::BackendUnavailable, command + ": " + res.spawn_error);
  }
  if (res.timed_out || res.exit_code != 0) {
    throw Error(Errc::BackendUnavailable,
                command + " exited with " + std::to_string(res.exit_code));
  }
  std::string response = read_file(out_tmp);
  fs::remove(out_tmp, ec);
  return response;
}

std::string invoke_http_api(const ModelConfig& cfg, const std::string& prompt) {
  const std::string url = require_param(cfg, "endpoint_url");
  static const std::regex url_re(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, url_re)) {
    throw Error(Errc::ConfigError, "bad endpoint_url: " + url);
  }
  const std::string base = m.str(1);
  const std::string path = m.str(2).empty() ? "/" : m.str(2);

  httplib::Client client(base);
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(300, 0);

  httplib::Headers headers;
  if (auto it = cfg.api_params.find("api_key_env"); it != cfg.api_params.end()) {
    // credentials come from the environment only, never from config values
    if (const char* key = std::getenv(it->second.c_str()); key && *key) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }

  nlohmann::json body{{"model", cfg.model_id},
                      {"prompt", prompt},
                      {"temperature", cfg.temperature},
                      {"max_tokens", cfg.max_tokens}};
  auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) {
    throw Error(Errc::BackendUnavailable, url + ": " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(Errc::BackendUnavailable, url + ": HTTP " + std::to_string(res->status));
  }
  try {
    nlohmann::json reply = nlohmann::json::parse(res->body);
    if (reply.contains("text")) return reply["text"].get<std::string>();
    if (reply.contains("choices") && !reply["choices"].empty()) {
      const auto& choice = reply["choices"][0];
      if (choice.contains("text")) return choice["text"].get<std::string>();
      if (choice.contains("message")) return choice["message"]["content"].get<std::string>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::BackendUnavailable, std::string("unparseable response: ") + e.what());
  }
  throw Error(Errc::BackendUnavailable, "response carries no completion text");
}

}  // namespace

std::vector<Candidate> sample_candidates(const BenchmarkTask& task, const ModelConfig& cfg,
                                         int k) {
  if (k <= 0) throw Error(Errc::ConfigError, "k must be positive");

  std::optional<ResponseCache> cache;
  if (auto it = cfg.api_params.find("cache_dir"); it != cfg.api_params.end()) {
    cache.emplace(it->second);
  } else if (cfg.endpoint_kind == EndpointKind::ReplayCache) {
    throw Error(Errc::ConfigError, "replay_cache backend requires api_params.cache_dir");
  }

  const std::string prompt = render_codegen_prompt(task);
  std::vector<Candidate> out;
  out.reserve(k);

  for (int j = 0; j < k; ++j) {
    const std::string key = cache_key(cfg.model_id, prompt, j, cfg.temperature);

    std::string raw;
    bool from_cache = false;
    if (cache) {
      if (auto hit = cache->lookup(key)) {
        raw = *hit;
        from_cache = true;
      }
    }
    if (!from_cache) {
      switch (cfg.endpoint_kind) {
        case EndpointKind::ReplayCache:
          throw Error(Errc::CacheMiss, task.id + ": no cached response for sample_index " +
                                           std::to_string(j) + " (key " + key + ")");
        case EndpointKind::LocalCommand:
          raw = invoke_local_command(task, cfg, prompt, j);
          break;
        case EndpointKind::HttpApi:
          raw = invoke_http_api(cfg, prompt);
          break;
      }
      if (cache) cache->store(key, raw, cfg.model_id, task.id, j, cfg.temperature);
    }

    Candidate cand;
    cand.task_id = task.id;
    cand.sample_index = j;
    cand.raw_response = raw;
    auto [code, status] = extract_code(raw, task.top_function);
    cand.extraction_status = status;
    if (status == ExtractionStatus::Ok) cand.source = code;
    out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace hlsbench
