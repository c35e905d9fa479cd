#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hlsbench {

namespace fs = std::filesystem;

// ---- strings ----

std::string trim(const std::string& s);
std::vector<std::string> split_lines(const std::string& s);
bool contains(const std::string& haystack, const std::string& needle);

// Collapses whitespace runs to a single space and drops whitespace adjacent
// to C punctuation, so "int  top ( int a )" and "int top(int a)" compare equal.
std::string normalize_signature(const std::string& s);

// Identifier immediately before the first '(' of a signature, empty if none.
std::string signature_function_name(const std::string& signature);

// Shortest round-trip decimal form, stable across platforms.
std::string format_double(double v);

std::string to_lower(std::string s);

// ---- hashing ----

std::string sha256_hex(const std::string& data);

// Truncated digest used for point ids and workspace names.
std::string short_digest(const std::string& data, std::size_t hex_chars = 16);

// ---- files ----

std::string read_file(const fs::path& p);
std::optional<std::string> read_file_if_exists(const fs::path& p);
void write_file(const fs::path& p, const std::string& content);
// write + rename so readers never observe a half-written file
void write_file_atomic(const fs::path& p, const std::string& content);

std::string utc_timestamp();

}  // namespace hlsbench
