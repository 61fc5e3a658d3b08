#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace vffkit {

using json = nlohmann::ordered_json;

// Reads a JSON-lines file; blank lines are skipped. Parse failures carry the
// 1-based line number.
std::vector<json> read_jsonl(const std::string& path);

// Writes one compact object per line, trailing newline after each.
void write_jsonl(const std::string& path, const std::vector<json>& rows);

// Reads a whole file into a string (binary-exact).
std::string read_file(const std::string& path);

// Writes a string to a file, creating parent directories as needed.
void write_file(const std::string& path, const std::string& contents);

}  // namespace vffkit
