#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hlsbench {

struct SubprocessResult {
  int exit_code = -1;       // valid when spawn succeeded and no timeout
  bool timed_out = false;
  bool spawn_failed = false;  // binary missing / exec failure
  std::string spawn_error;
  double wall_time_s = 0.0;
};

struct SubprocessSpec {
  std::vector<std::string> argv;
  std::filesystem::path cwd;
  std::filesystem::path stdout_path;  // stdout+stderr appended here when set
  std::optional<std::string> stdin_data;
  std::map<std::string, std::string> env;  // added on top of the inherited env
  double timeout_s = 0.0;                  // <=0 means no timeout
};

// Runs argv in its own process group; on timeout the whole group is killed.
SubprocessResult run_subprocess(const SubprocessSpec& spec);

}  // namespace hlsbench
