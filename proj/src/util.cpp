#include "hlsbench/util.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "hlsbench/errors.hpp"

namespace hlsbench {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

namespace {
bool is_punct_boundary(char c) {
  static const std::string punct = "(),*&<>[]=;:{}";
  return punct.find(c) != std::string::npos;
}
}  // namespace

std::string normalize_signature(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      // Peek past the whitespace run.
      std::size_t j = i;
      while (j < s.size() && std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      bool prev_punct = !out.empty() && is_punct_boundary(out.back());
      bool next_punct = j < s.size() && is_punct_boundary(s[j]);
      if (!out.empty() && j < s.size() && !prev_punct && !next_punct) out.push_back(' ');
      i = j - 1;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string signature_function_name(const std::string& signature) {
  auto paren = signature.find('(');
  if (paren == std::string::npos) return "";
  std::size_t e = paren;
  while (e > 0 && std::isspace(static_cast<unsigned char>(signature[e - 1]))) --e;
  std::size_t b = e;
  while (b > 0) {
    char c = signature[b - 1];
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      --b;
    } else {
      break;
    }
  }
  return signature.substr(b, e - b);
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string to_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) {
    throw Error(Errc::IoError, "sha256 digest failed");
  }
  static const char* hexd = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hexd[md[i] >> 4]);
    out.push_back(hexd[md[i] & 0xf]);
  }
  return out;
}

std::string short_digest(const std::string& data, std::size_t hex_chars) {
  return sha256_hex(data).substr(0, hex_chars);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::string> read_file_if_exists(const fs::path& p) {
  std::error_code ec;
  if (!fs::exists(p, ec) || ec) return std::nullopt;
  return read_file(p);
}

void write_file(const fs::path& p, const std::string& content) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot write " + p.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(Errc::IoError, "short write to " + p.string());
}

void write_file_atomic(const fs::path& p, const std::string& content) {
  fs::path tmp = p;
  tmp += ".tmp";
  write_file(tmp, content);
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) throw Error(Errc::IoError, "rename " + tmp.string() + " -> " + p.string() + ": " + ec.message());
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace hlsbench
