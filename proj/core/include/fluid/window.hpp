#pragma once

#include <cstdint>
#include <list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fluid/instance.hpp"
#include "fluid/term.hpp"

namespace fluid {

enum class WindowUnit { kInstances, kTriples };

struct WindowOptions {
  // nullopt: unbounded (gold standard).
  std::optional<std::uint64_t> capacity;
  WindowUnit unit = WindowUnit::kInstances;
  // Maintain reverse edges and incoming property sets.
  bool track_incoming = true;
};

struct AbsorbResult {
  DataInstance* subject = nullptr;
  // Set when the object is a resident instance whose incoming set grew.
  DataInstance* object = nullptr;
  // Instances removed to make room, least recently updated first.
  std::vector<DataInstance> evicted;
};

// Bounded cache of data instances, evicting the least recently updated one.
// Incoming properties are only discovered while both endpoints are resident.
class InstanceWindow {
 public:
  explicit InstanceWindow(WindowOptions options = {});

  InstanceWindow(const InstanceWindow&) = delete;
  InstanceWindow& operator=(const InstanceWindow&) = delete;
  InstanceWindow(InstanceWindow&&) = default;
  InstanceWindow& operator=(InstanceWindow&&) = default;

  AbsorbResult absorb(const Quad& q);

  const DataInstance* find(std::string_view subject_key) const;
  DataInstance* find(std::string_view subject_key);
  bool contains(std::string_view subject_key) const;

  // Removes one instance regardless of recency.
  std::optional<DataInstance> remove(std::string_view subject_key);
  // Empties the window, least recently updated first.
  std::vector<DataInstance> drain();

  std::size_t size() const { return order_.size(); }
  std::uint64_t resident_statements() const { return resident_statements_; }
  std::size_t peak_size() const { return peak_size_; }
  const WindowOptions& options() const { return options_; }

  // Least recently updated first.
  const std::list<DataInstance>& instances() const { return order_; }

  // Reverse edges recorded for `object_key`: (predicate, subject key) pairs
  // of resident subjects.
  const std::set<Edge>* reverse_edges(std::string_view object_key) const;

 private:
  using Slot = std::list<DataInstance>::iterator;

  void unlink_reverse(const DataInstance& instance);
  void add_reverse(const std::string& object_key, const std::string& predicate,
                   const std::string& subject_key);
  DataInstance take(Slot slot);
  bool over_capacity() const;

  WindowOptions options_;
  std::list<DataInstance> order_;
  std::unordered_map<std::string, Slot> slots_;
  std::unordered_map<std::string, std::set<Edge>> reverse_;
  std::uint64_t resident_statements_ = 0;
  std::size_t peak_size_ = 0;
};

}  // namespace fluid
