#include "fluid/index_io.hpp"

#include <fstream>

#include "fluid/errors.hpp"

namespace fluid {

namespace {

std::string_view unit_name(WindowUnit unit) {
  return unit == WindowUnit::kTriples ? "triples" : "instances";
}

WindowUnit unit_from_name(const std::string& name) {
  if (name == "instances") return WindowUnit::kInstances;
  if (name == "triples") return WindowUnit::kTriples;
  throw FormatError("unknown window unit '" + name + "'");
}

}  // namespace

void write_json(const std::filesystem::path& path, const nlohmann::json& value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StreamAborted("cannot write " + path.string());
  out << value.dump(2) << '\n';
  if (!out) throw StreamAborted("write failed: " + path.string());
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StreamAborted("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_index(const std::filesystem::path& dir, const Index& index,
                 const DatasetStats& stats, const RunRecord& run,
                 const nlohmann::json& extra) {
  if (!index.finalized()) throw Error("index must be finalized before it is written");
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / kIndexFile, std::ios::binary);
    if (!out) throw StreamAborted("cannot write " + (dir / kIndexFile).string());
    for (const auto& l : serialize_rdf(index)) out << l << '\n';
    if (!out) throw StreamAborted("write failed: " + (dir / kIndexFile).string());
  }

  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [id, payload] : index.elements()) counts[id.hex()] = payload.instance_count;
  const IndexMeta& meta = index.meta();
  nlohmann::json window = {{"unit", unit_name(meta.window_unit)}};
  window["capacity"] = meta.window_capacity ? nlohmann::json(*meta.window_capacity)
                                            : nlohmann::json(nullptr);
  nlohmann::json metadata = {
      {"format", "fluid-index/1"},
      {"run", to_json(run)},
      {"model", to_json(meta.config)},
      {"layout", layout_for(meta.config)},
      {"dataset", meta.dataset},
      {"window", window},
      {"dataset_stats", to_json(stats)},
      {"instance_counts", counts},
  };
  if (stats.triple_count > 0 && stats.instance_count > 0) {
    metadata["metrics"] = to_json(compute_metrics(index, stats));
  }
  for (const auto& [key, value] : extra.items()) metadata[key] = value;
  write_json(dir / kMetadataFile, metadata);
}

LoadedIndex read_index(const std::filesystem::path& dir) {
  LoadedIndex loaded;
  loaded.metadata = read_json(dir / kMetadataFile);
  const nlohmann::json& m = loaded.metadata;
  IndexMeta meta;
  std::map<ElementId, std::uint64_t> counts;
  try {
    if (m.at("format") != "fluid-index/1") throw FormatError("unsupported index format");
    meta.config = model_config_from_json(m.at("model"));
    meta.dataset = m.at("dataset").get<std::string>();
    const auto& window = m.at("window");
    meta.window_unit = unit_from_name(window.at("unit").get<std::string>());
    if (!window.at("capacity").is_null()) {
      meta.window_capacity = window.at("capacity").get<std::uint64_t>();
    }
    loaded.stats = dataset_stats_from_json(m.at("dataset_stats"));
    for (const auto& [hex, n] : m.at("instance_counts").items()) {
      counts[ElementId::from_hex(hex)] = n.get<std::uint64_t>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError((dir / kMetadataFile).string() + ": " + e.what());
  }

  std::ifstream in(dir / kIndexFile, std::ios::binary);
  if (!in) throw StreamAborted("cannot open " + (dir / kIndexFile).string());
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(std::move(l));
  loaded.index = parse_rdf(lines, std::move(meta), counts);
  return loaded;
}

}  // namespace fluid
