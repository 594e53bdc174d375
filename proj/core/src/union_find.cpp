#include "fluid/union_find.hpp"

#include <algorithm>
#include <utility>

namespace fluid {

std::uint32_t StringUnionFind::intern(const std::string& key) {
  auto [it, inserted] =
      ids_.try_emplace(key, static_cast<std::uint32_t>(names_.size()));
  if (inserted) {
    const std::uint32_t id = it->second;
    names_.push_back(key);
    parent_.push_back(id);
    smallest_.push_back(id);
    members_.push_back({id});
  }
  return it->second;
}

void StringUnionFind::add(const std::string& key) { intern(key); }

std::uint32_t StringUnionFind::root(std::uint32_t id) const {
  std::uint32_t r = id;
  while (parent_[r] != r) r = parent_[r];
  while (parent_[id] != r) {
    std::uint32_t next = parent_[id];
    parent_[id] = r;
    id = next;
  }
  return r;
}

bool StringUnionFind::unite(const std::string& a, const std::string& b) {
  std::uint32_t ra = root(intern(a));
  std::uint32_t rb = root(intern(b));
  if (ra == rb) return false;
  if (members_[ra].size() < members_[rb].size()) std::swap(ra, rb);
  parent_[rb] = ra;
  auto& into = members_[ra];
  auto& from = members_[rb];
  into.insert(into.end(), from.begin(), from.end());
  from.clear();
  from.shrink_to_fit();
  if (names_[smallest_[rb]] < names_[smallest_[ra]]) smallest_[ra] = smallest_[rb];
  return true;
}

bool StringUnionFind::contains(const std::string& key) const {
  return ids_.contains(key);
}

std::string StringUnionFind::find(const std::string& key) const {
  auto it = ids_.find(key);
  if (it == ids_.end()) return key;
  return names_[smallest_[root(it->second)]];
}

bool StringUnionFind::same(const std::string& a, const std::string& b) const {
  return find(a) == find(b);
}

std::vector<std::string> StringUnionFind::members(const std::string& key) const {
  auto it = ids_.find(key);
  if (it == ids_.end()) return {key};
  std::vector<std::string> out;
  for (std::uint32_t m : members_[root(it->second)]) out.push_back(names_[m]);
  std::sort(out.begin(), out.end());
  return out;
}

std::map<std::string, std::vector<std::string>> StringUnionFind::classes() const {
  std::map<std::string, std::vector<std::string>> out;
  for (std::uint32_t id = 0; id < names_.size(); ++id) {
    if (parent_[id] != id) continue;
    auto& members = out[names_[smallest_[id]]];
    for (std::uint32_t m : members_[id]) members.push_back(names_[m]);
    std::sort(members.begin(), members.end());
  }
  return out;
}

}  // namespace fluid
