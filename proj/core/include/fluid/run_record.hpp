#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace fluid {

std::string_view library_version();

// Hex BLAKE2b-256 digest of a file's bytes. Throws StreamAborted.
std::string file_digest(const std::filesystem::path& path);

// Provenance written next to every artifact: the command, its effective
// flags and a digest of every input file.
struct RunRecord {
  std::string command;
  std::map<std::string, std::string> flags;
  std::vector<std::pair<std::string, std::string>> inputs;  // (path, digest)

  void add_input(const std::filesystem::path& path);
};

nlohmann::json to_json(const RunRecord& record);

}  // namespace fluid
