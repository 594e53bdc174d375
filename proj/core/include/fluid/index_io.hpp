#pragma once

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "fluid/dataset_stats.hpp"
#include "fluid/index.hpp"
#include "fluid/run_record.hpp"

namespace fluid {

// On-disk index: <dir>/index.nt (sorted N-Triples) and <dir>/metadata.json
// (model, window, dataset statistics, metrics, per-element instance counts
// and the run record).
inline constexpr const char* kIndexFile = "index.nt";
inline constexpr const char* kMetadataFile = "metadata.json";

// Top-level keys of `extra` are added to the metadata document.
void write_index(const std::filesystem::path& dir, const Index& index,
                 const DatasetStats& stats, const RunRecord& run,
                 const nlohmann::json& extra = nlohmann::json::object());

struct LoadedIndex {
  Index index;
  DatasetStats stats;
  nlohmann::json metadata;
};

// Throws FormatError, StreamAborted.
LoadedIndex read_index(const std::filesystem::path& dir);

// Writes `value` as pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& value);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace fluid
