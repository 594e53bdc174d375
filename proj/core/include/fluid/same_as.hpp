#pragma once

#include <string>
#include <vector>

#include "fluid/instance.hpp"
#include "fluid/term.hpp"
#include "fluid/union_find.hpp"

namespace fluid {

// Identity classes induced by owl:sameAs between non-literal terms. Keys are
// term keys; the representative is the smallest key of a class.
class SameAsPartition {
 public:
  // Links subject and object if q is an owl:sameAs statement with a
  // non-literal object. Returns true if two classes merged.
  bool ingest(const Quad& q);
  bool link(const std::string& a, const std::string& b);

  std::string canonical(const std::string& key) const { return uf_.find(key); }
  std::vector<std::string> members(const std::string& key) const {
    return uf_.members(key);
  }
  bool empty() const { return uf_.size() == 0; }

 private:
  StringUnionFind uf_;
};

std::string same_as_canonical(const SameAsPartition& partition,
                              const std::string& key);

// Merges instances whose subjects share a representative. The merged
// instance carries the representative as subject and the union of every
// component. Output is ordered by subject.
std::vector<DataInstance> merge_same_as_instances(const SameAsPartition& partition,
                                                  std::vector<DataInstance> instances);

}  // namespace fluid
