#include "fluid/same_as.hpp"

#include <map>

#include "fluid/vocab.hpp"

namespace fluid {

bool SameAsPartition::ingest(const Quad& q) {
  if (q.predicate.value != vocab::kOwlSameAs || q.object.is_literal()) return false;
  return link(q.subject.to_ntriples(), q.object.to_ntriples());
}

bool SameAsPartition::link(const std::string& a, const std::string& b) {
  return uf_.unite(a, b);
}

std::string same_as_canonical(const SameAsPartition& partition,
                              const std::string& key) {
  return partition.canonical(key);
}

std::vector<DataInstance> merge_same_as_instances(const SameAsPartition& partition,
                                                  std::vector<DataInstance> instances) {
  std::map<std::string, DataInstance> merged;
  for (DataInstance& instance : instances) {
    std::string rep = partition.canonical(instance.subject);
    auto [it, inserted] = merged.try_emplace(rep);
    if (inserted) {
      it->second = std::move(instance);
      it->second.subject = rep;
    } else {
      merge_into(it->second, instance);
    }
  }
  std::vector<DataInstance> out;
  out.reserve(merged.size());
  for (auto& [rep, instance] : merged) out.push_back(std::move(instance));
  return out;
}

}  // namespace fluid
