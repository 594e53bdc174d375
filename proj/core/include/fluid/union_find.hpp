#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fluid {

// Disjoint sets over strings. The representative of a class is its
// lexicographically smallest member, so the observable partition does not
// depend on the order of unions.
class StringUnionFind {
 public:
  // Adds `key` as a singleton if unseen.
  void add(const std::string& key);
  // Returns true if two distinct classes were merged.
  bool unite(const std::string& a, const std::string& b);

  bool contains(const std::string& key) const;
  // Representative of `key`; an unseen key is its own representative.
  std::string find(const std::string& key) const;
  bool same(const std::string& a, const std::string& b) const;

  // Members of the class containing `key` (sorted); {key} if unseen.
  std::vector<std::string> members(const std::string& key) const;
  // Representative -> sorted members, for every class.
  std::map<std::string, std::vector<std::string>> classes() const;

  std::size_t size() const { return names_.size(); }

 private:
  std::uint32_t root(std::uint32_t id) const;
  std::uint32_t intern(const std::string& key);

  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> names_;
  mutable std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> smallest_;  // valid at roots
  std::vector<std::vector<std::uint32_t>> members_;  // valid at roots
};

}  // namespace fluid
