#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "fluid/term.hpp"

namespace fluid {

struct Moments {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation

  friend bool operator==(const Moments&, const Moments&) = default;
};

// Descriptive statistics of one dataset. An instance is a distinct subject.
// Outgoing counts distinct non-rdf:type (predicate, object) pairs, incoming
// counts distinct (subject, predicate) pairs pointing at the instance.
struct DatasetStats {
  std::uint64_t triple_count = 0;
  std::uint64_t instance_count = 0;
  std::uint64_t data_source_count = 0;
  std::uint64_t unique_properties = 0;  // excludes rdf:type
  std::uint64_t unique_types = 0;
  Moments outgoing;
  Moments incoming;
  Moments types;
  Moments data_sources;

  friend bool operator==(const DatasetStats&, const DatasetStats&) = default;
};

// Streams quads into set-based counters, so the result does not depend on
// the order in which quads arrive.
class StatsAccumulator {
 public:
  void add(const Quad& q);
  DatasetStats finish() const;

 private:
  struct TripleKey {
    std::uint32_t s, p, o;
    friend bool operator==(const TripleKey&, const TripleKey&) = default;
  };
  struct TripleHash {
    std::size_t operator()(const TripleKey& k) const noexcept;
  };
  struct TermCounters {
    std::uint32_t outgoing = 0;
    std::uint32_t incoming = 0;
    std::uint32_t types = 0;
    std::uint32_t sources = 0;
    bool is_subject = false;
  };

  std::uint32_t intern(std::string key);
  TermCounters& counters(std::uint32_t id);

  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<TermCounters> terms_;
  std::unordered_set<TripleKey, TripleHash> triples_;
  std::unordered_set<std::uint64_t> subject_sources_;
  std::unordered_set<std::uint32_t> sources_;
  std::unordered_set<std::uint32_t> properties_;
  std::unordered_set<std::uint32_t> type_terms_;
  std::uint64_t triple_count_ = 0;
};

DatasetStats compute_dataset_stats(std::span<const Quad> quads);

nlohmann::json to_json(const DatasetStats& stats);
DatasetStats dataset_stats_from_json(const nlohmann::json& j);
// Aligned "key: value" lines.
std::string to_text(const DatasetStats& stats);

}  // namespace fluid
