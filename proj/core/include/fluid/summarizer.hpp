#pragma once

#include <map>
#include <string>

#include "fluid/description.hpp"
#include "fluid/instance.hpp"
#include "fluid/model_config.hpp"
#include "fluid/union_find.hpp"

namespace fluid {

// Resolves an object key to the instance describing it, already merged and
// enriched as the model requires. Returns nullptr for unknown subjects.
class NeighborLookup {
 public:
  virtual ~NeighborLookup() = default;
  virtual const DataInstance* resolve(const std::string& object_key) const = 0;
};

// Lookup over a map keyed by subject key. Used for tests and small batches.
class MapLookup : public NeighborLookup {
 public:
  MapLookup() = default;
  explicit MapLookup(const std::map<std::string, DataInstance>& instances)
      : instances_(&instances) {}

  const DataInstance* resolve(const std::string& object_key) const override;

 private:
  const std::map<std::string, DataInstance>* instances_ = nullptr;
};

// Outgoing and incoming co-occurrence partitions of properties. Two
// properties share a clique iff a chain of instances links them.
class PropertyCliques {
 public:
  void update(const StringSet& outgoing, const StringSet& incoming);

  std::string outgoing_clique(const std::string& property) const {
    return outgoing_.find(property);
  }
  std::string incoming_clique(const std::string& property) const {
    return incoming_.find(property);
  }
  const StringUnionFind& outgoing() const { return outgoing_; }
  const StringUnionFind& incoming() const { return incoming_; }

 private:
  static void unite_all(StringUnionFind& uf, const StringSet& properties);

  StringUnionFind outgoing_;
  StringUnionFind incoming_;
};

// The edges a model summarizes by: asserted plus inferred edges, plus
// (rdf:type, class) pairs for models that do not keep a separate type set.
EdgeSet summarized_edges(const ModelConfig& config, const DataInstance& instance);
StringSet summarized_properties(const ModelConfig& config, const DataInstance& instance);

void update_cliques(PropertyCliques& cliques, const ModelConfig& config,
                    const DataInstance& instance);
// Treats rdf:type as an ordinary property.
void update_cliques(PropertyCliques& cliques, const DataInstance& instance);

// Schema element of `instance` under `config`. Neighbors are looked up
// through `neighbors`; literals and unresolvable objects map to the empty
// element. For clique models the element carries the outgoing and incoming
// clique representatives; the index merges them into OR-classes.
// Throws InapplicableHeight, MissingCliques.
SchemaElement schema_element(const ModelConfig& config, const DataInstance& instance,
                             const NeighborLookup& neighbors,
                             const PropertyCliques* cliques = nullptr);

// Description layout every element of `config` carries.
std::uint8_t layout_for(const ModelConfig& config);

}  // namespace fluid
