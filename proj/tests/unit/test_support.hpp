#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "hlsbench/util.hpp"

namespace hlsbench::testing {

inline fs::path fixture_dir() { return fs::path(HLSBENCH_FIXTURE_DIR); }

inline fs::path cli_path() { return fs::path(HLSBENCH_CLI_PATH); }

// Unique scratch directory, removed on scope exit.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "t") {
    static std::mt19937_64 rng(std::random_device{}());
    dir_ = fs::temp_directory_path() /
           ("hlsbench-" + tag + "-" + std::to_string(rng() & 0xffffffffu));
    fs::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return dir_; }
  fs::path operator/(const std::string& sub) const { return dir_ / sub; }

 private:
  fs::path dir_;
};

inline void copy_tree(const fs::path& from, const fs::path& to) {
  fs::create_directories(to);
  fs::copy(from, to, fs::copy_options::recursive | fs::copy_options::overwrite_existing);
}

}  // namespace hlsbench::testing
