#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fluid/dataset_stats.hpp"
#include "fluid/index.hpp"
#include "fluid/model_config.hpp"
#include "fluid/nquads.hpp"
#include "fluid/schema_graph.hpp"
#include "fluid/window.hpp"

namespace fluid {

using QuadSink = std::function<void(const Quad&)>;

// A replayable quad stream. Pre-processed inference reads it twice.
class QuadSource {
 public:
  virtual ~QuadSource() = default;
  virtual void replay(const QuadSink& sink) = 0;
};

class MemorySource : public QuadSource {
 public:
  explicit MemorySource(std::span<const Quad> quads) : quads_(quads) {}
  void replay(const QuadSink& sink) override;

 private:
  std::span<const Quad> quads_;
};

// N-Quads files read in order. Blank-node labels are scoped per file.
// Malformed lines are reported through `on_error` on the first replay only
// and otherwise skipped.
class FileSource : public QuadSource {
 public:
  using ErrorHandler = std::function<void(const std::filesystem::path&, const ParseError&)>;

  FileSource(std::vector<std::filesystem::path> paths, std::string default_source,
             ErrorHandler on_error = {});
  void replay(const QuadSink& sink) override;

  // Counters of the most recent replay, summed over files.
  const ReaderCounters& counters() const { return counters_; }

 private:
  std::vector<std::filesystem::path> paths_;
  std::string default_source_;
  ErrorHandler on_error_;
  ReaderCounters counters_;
  bool replayed_ = false;
};

// Called once per summarized instance with the subjects merged into it
// (more than one under owl:sameAs) and its element before OR-merging.
using SummaryObserver =
    std::function<void(const std::vector<std::string>& subjects, const SchemaElement& element)>;

struct RunPlan {
  ModelConfig config;
  // nullopt: unbounded window with a single flush at the end (gold standard).
  std::optional<std::uint64_t> window_capacity;
  WindowUnit window_unit = WindowUnit::kInstances;
  std::string dataset;
  // Pre-processed inference: use this schema graph instead of a first pass.
  std::optional<SchemaGraph> schema;
  SummaryObserver observer;
  // Log progress every this many quads (0: never).
  std::uint64_t progress_every = 1'000'000;
};

struct BuildResult {
  Index index;
  DatasetStats stats;
  SchemaGraph schema;
  std::uint64_t quads = 0;
  std::uint64_t summarized = 0;
  std::uint64_t evicted = 0;
  std::size_t peak_window = 0;
};

// Streams `source` through the window and summarizes every instance once,
// on eviction or at the final flush. Throws InvalidConfig,
// InapplicableHeight, StreamAborted.
BuildResult build_index(const RunPlan& plan, QuadSource& source);
BuildResult build_index(const RunPlan& plan, std::span<const Quad> quads);

}  // namespace fluid
