#include "fluid/instance.hpp"

namespace fluid {

StringSet effective_type_set(const DataInstance& i) {
  StringSet out = i.types;
  out.insert(i.inferred_types.begin(), i.inferred_types.end());
  return out;
}

StringSet property_set(const DataInstance& i) {
  StringSet out;
  for (const auto& [p, o] : i.edges) out.insert(out.end(), p);
  out.insert(i.inferred_properties.begin(), i.inferred_properties.end());
  return out;
}

EdgeSet effective_edges(const DataInstance& i) {
  EdgeSet out = i.edges;
  out.insert(i.inferred_edges.begin(), i.inferred_edges.end());
  return out;
}

void merge_into(DataInstance& target, const DataInstance& other) {
  target.types.insert(other.types.begin(), other.types.end());
  target.edges.insert(other.edges.begin(), other.edges.end());
  target.incoming.insert(other.incoming.begin(), other.incoming.end());
  target.sources.insert(other.sources.begin(), other.sources.end());
  target.inferred_types.insert(other.inferred_types.begin(),
                               other.inferred_types.end());
  target.inferred_properties.insert(other.inferred_properties.begin(),
                                    other.inferred_properties.end());
  target.inferred_edges.insert(other.inferred_edges.begin(),
                               other.inferred_edges.end());
}

}  // namespace fluid
