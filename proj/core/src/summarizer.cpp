#include "fluid/summarizer.hpp"

#include "fluid/errors.hpp"
#include "fluid/vocab.hpp"

namespace fluid {

const DataInstance* MapLookup::resolve(const std::string& object_key) const {
  if (instances_ == nullptr) return nullptr;
  auto it = instances_->find(object_key);
  return it == instances_->end() ? nullptr : &it->second;
}

void PropertyCliques::unite_all(StringUnionFind& uf, const StringSet& properties) {
  if (properties.empty()) return;
  const std::string& first = *properties.begin();
  uf.add(first);
  for (const auto& p : properties) uf.unite(first, p);
}

void PropertyCliques::update(const StringSet& outgoing, const StringSet& incoming) {
  unite_all(outgoing_, outgoing);
  unite_all(incoming_, incoming);
}

EdgeSet summarized_edges(const ModelConfig& config, const DataInstance& instance) {
  EdgeSet edges = effective_edges(instance);
  if (!config.use_type_set) {
    const std::string type_iri(vocab::kRdfType);
    for (const auto& t : effective_type_set(instance)) edges.emplace(type_iri, t);
  }
  return edges;
}

StringSet summarized_properties(const ModelConfig& config,
                                const DataInstance& instance) {
  StringSet out = property_set(instance);
  if (!config.use_type_set &&
      (!instance.types.empty() || !instance.inferred_types.empty())) {
    out.insert(std::string(vocab::kRdfType));
  }
  return out;
}

void update_cliques(PropertyCliques& cliques, const ModelConfig& config,
                    const DataInstance& instance) {
  cliques.update(summarized_properties(config, instance), instance.incoming);
}

void update_cliques(PropertyCliques& cliques, const DataInstance& instance) {
  ModelConfig untyped;
  update_cliques(cliques, untyped, instance);
}

namespace {

class Describer {
 public:
  Describer(const ModelConfig& config, const NeighborLookup& neighbors,
            const PropertyCliques* cliques)
      : config_(config), neighbors_(neighbors), cliques_(cliques) {}

  Description describe(const DataInstance& instance, int height) const {
    Description d;
    if (height == 0) {
      d.layout = kTypes;
      StringSet types = effective_type_set(instance);
      d.types.assign(types.begin(), types.end());
      return d;
    }
    if (config_.related_properties) return describe_cliques(instance);

    if (config_.use_type_set) {
      d.layout |= kTypes;
      StringSet types = effective_type_set(instance);
      d.types.assign(types.begin(), types.end());
    }
    if (config_.use_incoming_property_set) {
      d.layout |= kIncoming;
      d.incoming.assign(instance.incoming.begin(), instance.incoming.end());
    }
    const EdgeSet edges = summarized_edges(config_, instance);
    switch (config_.neighbor_mode) {
      case NeighborMode::kObjectIdentity:
        d.layout |= kLinks;
        d.links.assign(edges.begin(), edges.end());
        break;
      case NeighborMode::kNeighborSchema:
        d.layout |= kLinks;
        for (const auto& [p, o] : edges) d.links.emplace_back(p, reference(o, height - 1));
        break;
      case NeighborMode::kAggregatedNeighborTypes:
        add_properties(d, edges);
        d.layout |= kNeighbors;
        for (const auto& [p, o] : edges) {
          if (height == 1) {
            const DataInstance* n = resolve(o);
            if (n == nullptr) continue;
            for (const auto& t : effective_type_set(*n)) d.neighbors.push_back(t);
          } else {
            d.neighbors.push_back(reference(o, height - 1));
          }
        }
        break;
      case NeighborMode::kNone:
        if (height == 1) {
          add_properties(d, edges);
        } else {
          d.layout |= kLinks;
          for (const auto& [p, o] : edges) {
            d.links.emplace_back(p, reference(o, height - 1));
          }
        }
        break;
    }
    d.canonicalize();
    return d;
  }

 private:
  void add_properties(Description& d, const EdgeSet& edges) const {
    if (!config_.use_property_set) return;
    d.layout |= kProperties;
    for (const auto& [p, o] : edges) d.properties.push_back(p);
  }

  Description describe_cliques(const DataInstance& instance) const {
    if (cliques_ == nullptr) {
      throw MissingCliques("model '" + config_.name +
                           "' uses related properties but no clique partition was given");
    }
    Description d;
    d.layout = kCliques;
    const StringSet outgoing = summarized_properties(config_, instance);
    if (!outgoing.empty()) d.properties.push_back(cliques_->outgoing_clique(*outgoing.begin()));
    if (!instance.incoming.empty()) {
      d.incoming.push_back(cliques_->incoming_clique(*instance.incoming.begin()));
    }
    return d;
  }

  const DataInstance* resolve(const std::string& object_key) const {
    if (key_is_literal(object_key)) return nullptr;
    return neighbors_.resolve(object_key);
  }

  std::string reference(const std::string& object_key, int height) const {
    const DataInstance* n = resolve(object_key);
    if (n == nullptr) return empty_element_key();
    Description nested = describe(*n, height);
    nested.canonicalize();
    return nested.id().key();
  }

  const ModelConfig& config_;
  const NeighborLookup& neighbors_;
  const PropertyCliques* cliques_;
};

}  // namespace

SchemaElement schema_element(const ModelConfig& config, const DataInstance& instance,
                             const NeighborLookup& neighbors,
                             const PropertyCliques* cliques) {
  config.require_applicable_height();
  Describer describer(config, neighbors, cliques);
  return SchemaElement::from(describer.describe(instance, config.k));
}

std::uint8_t layout_for(const ModelConfig& config) {
  if (config.k == 0) return kTypes;
  if (config.related_properties) return kCliques;
  std::uint8_t layout = 0;
  if (config.use_type_set) layout |= kTypes;
  if (config.use_incoming_property_set) layout |= kIncoming;
  const std::uint8_t properties =
      config.use_property_set ? std::uint8_t{kProperties} : std::uint8_t{0};
  switch (config.neighbor_mode) {
    case NeighborMode::kObjectIdentity:
    case NeighborMode::kNeighborSchema:
      layout |= kLinks;
      break;
    case NeighborMode::kAggregatedNeighborTypes:
      layout |= properties | kNeighbors;
      break;
    case NeighborMode::kNone:
      layout |= config.k == 1 ? properties : std::uint8_t{kLinks};
      break;
  }
  return layout;
}

}  // namespace fluid
