#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fluid/dataset_stats.hpp"
#include "fluid/description.hpp"
#include "fluid/model_config.hpp"
#include "fluid/summarizer.hpp"
#include "fluid/window.hpp"

namespace fluid {

struct Payload {
  StringSet sources;
  std::uint64_t instance_count = 0;
  Description description;

  friend bool operator==(const Payload&, const Payload&) = default;
};

struct IndexMeta {
  ModelConfig config;
  std::string dataset;
  std::optional<std::uint64_t> window_capacity;  // nullopt: gold standard
  WindowUnit window_unit = WindowUnit::kInstances;

  friend bool operator==(const IndexMeta&, const IndexMeta&) = default;
};

struct IndexMetrics {
  std::uint64_t triple_count = 0;
  std::uint64_t element_count = 0;
  double compression_ratio = 0.0;    // index triples / dataset triples
  double summarization_ratio = 0.0;  // elements / dataset instances
};

// Schema-level index: schema element -> (data sources, instance count,
// description).
class Index {
 public:
  Index() = default;
  explicit Index(IndexMeta meta) : meta_(std::move(meta)) {}

  // Adds one summarized instance. Throws EmptySources.
  void record(const SchemaElement& element, const StringSet& sources);
  // Restores a persisted, already final entry verbatim.
  void restore(const ElementId& id, Payload payload);

  // Closes recording. For clique layouts, maps the recorded clique
  // representatives through the final partition and unions every element
  // that shares an outgoing or an incoming clique. Throws MissingCliques.
  void finalize(const PropertyCliques* cliques = nullptr);
  bool finalized() const { return finalized_; }

  // Final id of an id returned by SchemaElement::from at record time.
  ElementId resolve(const ElementId& recorded) const;

  const std::map<ElementId, Payload>& elements() const { return elements_; }
  std::size_t element_count() const { return elements_.size(); }
  const Payload* find(const ElementId& id) const;
  const IndexMeta& meta() const { return meta_; }

  friend bool operator==(const Index& a, const Index& b) {
    return a.elements_ == b.elements_;
  }

 private:
  void merge_cliques(const PropertyCliques& cliques);

  IndexMeta meta_;
  std::map<ElementId, Payload> elements_;
  std::map<ElementId, ElementId> redirects_;
  bool finalized_ = false;
};

// N-Triples lines (without newline), sorted bytewise. Per element: one
// `a fluid:SchemaElement`, one hasType per type, one hasProperty per
// property, one hasIncomingProperty per incoming property, one
// (element, p, reference) per link, one hasNeighbor per aggregated
// neighbor entry and one foundIn per data source.
std::vector<std::string> serialize_rdf(const Index& index);
std::uint64_t count_rdf_triples(const Index& index);

// Rebuilds an index from serialize_rdf output. Instance counts are not part
// of the RDF form and come from `instance_counts` (missing entries: 1).
// Throws FormatError.
Index parse_rdf(std::span<const std::string> lines, IndexMeta meta,
                const std::map<ElementId, std::uint64_t>& instance_counts = {});

// Throws DivisionByZero for an empty dataset.
IndexMetrics compute_metrics(const Index& index, const DatasetStats& stats);

nlohmann::json to_json(const IndexMetrics& metrics);

}  // namespace fluid
