#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "fluid/instance.hpp"
#include "fluid/term.hpp"

namespace fluid {

enum class InferenceMode { kNone, kOnTheFly, kPreProcessed };

std::string_view to_string(InferenceMode mode);
// Accepts "none", "otf"/"on-the-fly", "pre"/"pre-processed".
InferenceMode inference_mode_from_string(std::string_view text);

enum class SchemaRelation { kSubClassOf, kSubPropertyOf, kDomain, kRange };

// RDFS vocabulary extracted from the data. Classes are term keys,
// properties bare IRIs.
class SchemaGraph {
 public:
  // Adds q if it is an rdfs:subClassOf / subPropertyOf / domain / range
  // statement with an IRI object. Returns true if the graph changed.
  bool ingest(const Quad& q);
  bool add(SchemaRelation relation, const std::string& subject,
           const std::string& object);

  // Everything reachable over subClassOf (resp. subPropertyOf). The start
  // node is included only when a cycle leads back to it.
  StringSet super_classes(const std::string& class_key) const;
  StringSet super_properties(const std::string& property) const;
  const StringSet* domain(const std::string& property) const;
  const StringSet* range(const std::string& property) const;

  bool empty() const;
  std::size_t size() const;

  // Precomputes closures for read-only use. Any later mutation drops them.
  void freeze();
  bool frozen() const { return frozen_; }

  // One `relation<TAB>subject<TAB>object` line per entry, sorted. Subjects
  // and objects are N-Triples terms.
  void write_snapshot(std::ostream& out) const;
  static SchemaGraph read_snapshot(std::istream& in);

  friend bool operator==(const SchemaGraph& a, const SchemaGraph& b) {
    return a.sub_class_of_ == b.sub_class_of_ &&
           a.sub_property_of_ == b.sub_property_of_ && a.domain_ == b.domain_ &&
           a.range_ == b.range_;
  }

 private:
  using Relation = std::map<std::string, StringSet>;
  static StringSet closure(const Relation& edges, const std::string& start);
  void thaw();

  Relation sub_class_of_;
  Relation sub_property_of_;
  Relation domain_;
  Relation range_;
  bool frozen_ = false;
  Relation class_closure_;
  Relation property_closure_;
};

// Free-function spelling of SchemaGraph::ingest.
bool ingest_schema_quad(SchemaGraph& graph, const Quad& q);

// Adds RDFS consequences to `instance`: super-classes of every effective
// type, domains of every effective property, ranges of every incoming
// property, and super-properties of every outgoing edge. Iterates to a
// fixed point. Idempotent and monotone in the graph.
void enrich_instance(const SchemaGraph& graph, DataInstance& instance);
DataInstance enriched(const SchemaGraph& graph, DataInstance instance);

}  // namespace fluid
