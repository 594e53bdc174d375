#pragma once

#include <set>
#include <string>
#include <utility>

namespace fluid {

// (predicate IRI, object term key)
using Edge = std::pair<std::string, std::string>;
using EdgeSet = std::set<Edge>;
using StringSet = std::set<std::string>;

// All statements sharing one subject. Types and objects are stored as term
// keys (N-Triples renderings), predicates and data sources as bare IRIs.
// Ordered sets keep every component in canonical order.
struct DataInstance {
  std::string subject;
  StringSet types;
  EdgeSet edges;  // never contains rdf:type
  StringSet incoming;
  StringSet sources;
  StringSet inferred_types;
  StringSet inferred_properties;
  // (super-property, object) pairs implied by rdfs:subPropertyOf; their
  // predicates are exactly inferred_properties.
  EdgeSet inferred_edges;

  // Number of distinct type and edge statements held.
  std::size_t statement_count() const { return types.size() + edges.size(); }

  friend bool operator==(const DataInstance&, const DataInstance&) = default;
};

StringSet effective_type_set(const DataInstance& i);
StringSet property_set(const DataInstance& i);
// Asserted plus inferred edges.
EdgeSet effective_edges(const DataInstance& i);

// Unions every component of `other` into `target`; `target.subject` is kept.
void merge_into(DataInstance& target, const DataInstance& other);

}  // namespace fluid
