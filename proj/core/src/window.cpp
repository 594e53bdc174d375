#include "fluid/window.hpp"

#include <utility>

#include "fluid/vocab.hpp"

namespace fluid {

InstanceWindow::InstanceWindow(WindowOptions options)
    : options_(std::move(options)) {}

bool InstanceWindow::over_capacity() const {
  if (!options_.capacity) return false;
  if (options_.unit == WindowUnit::kInstances) {
    return order_.size() > *options_.capacity;
  }
  return resident_statements_ > *options_.capacity;
}

void InstanceWindow::add_reverse(const std::string& object_key,
                                 const std::string& predicate,
                                 const std::string& subject_key) {
  reverse_[object_key].emplace(predicate, subject_key);
}

void InstanceWindow::unlink_reverse(const DataInstance& instance) {
  auto drop = [&](const std::string& object_key, const std::string& predicate) {
    auto it = reverse_.find(object_key);
    if (it == reverse_.end()) return;
    it->second.erase(Edge{predicate, instance.subject});
    if (it->second.empty()) reverse_.erase(it);
  };
  const std::string type_iri(vocab::kRdfType);
  for (const auto& t : instance.types) {
    if (!key_is_literal(t)) drop(t, type_iri);
  }
  for (const auto& [p, o] : instance.edges) {
    if (!key_is_literal(o)) drop(o, p);
  }
}

DataInstance InstanceWindow::take(Slot slot) {
  if (options_.track_incoming) unlink_reverse(*slot);
  resident_statements_ -= slot->statement_count();
  slots_.erase(slot->subject);
  DataInstance out = std::move(*slot);
  order_.erase(slot);
  return out;
}

AbsorbResult InstanceWindow::absorb(const Quad& q) {
  AbsorbResult result;
  std::string subject_key = q.subject.to_ntriples();
  auto found = slots_.find(subject_key);
  Slot slot;
  if (found == slots_.end()) {
    if (options_.capacity && options_.unit == WindowUnit::kInstances) {
      while (!order_.empty() && order_.size() >= *options_.capacity) {
        result.evicted.push_back(take(order_.begin()));
      }
    }
    order_.push_back(DataInstance{});
    slot = std::prev(order_.end());
    slot->subject = subject_key;
    slots_.emplace(subject_key, slot);
    if (options_.track_incoming) {
      if (auto rev = reverse_.find(subject_key); rev != reverse_.end()) {
        for (const auto& [p, s] : rev->second) slot->incoming.insert(p);
      }
    }
  } else {
    slot = found->second;
    order_.splice(order_.end(), order_, slot);
  }

  DataInstance& inst = *slot;
  const std::size_t before = inst.statement_count();
  std::string object_key = q.object.to_ntriples();
  const bool is_type = q.predicate.value == vocab::kRdfType;
  if (is_type) {
    inst.types.insert(object_key);
  } else {
    inst.edges.emplace(q.predicate.value, object_key);
  }
  inst.sources.insert(q.context.value);
  resident_statements_ += inst.statement_count() - before;

  if (options_.track_incoming && !q.object.is_literal()) {
    add_reverse(object_key, q.predicate.value, subject_key);
    if (auto target = slots_.find(object_key); target != slots_.end()) {
      if (target->second->incoming.insert(q.predicate.value).second) {
        result.object = &*target->second;
      }
    }
  }

  if (options_.capacity && options_.unit == WindowUnit::kTriples) {
    while (over_capacity() && order_.begin() != slot) {
      DataInstance* object = result.object;
      if (object != nullptr && object == &*order_.begin()) result.object = nullptr;
      result.evicted.push_back(take(order_.begin()));
    }
  }
  result.subject = &inst;
  peak_size_ = std::max(peak_size_, order_.size());
  return result;
}

const DataInstance* InstanceWindow::find(std::string_view subject_key) const {
  auto it = slots_.find(std::string(subject_key));
  return it == slots_.end() ? nullptr : &*it->second;
}

DataInstance* InstanceWindow::find(std::string_view subject_key) {
  auto it = slots_.find(std::string(subject_key));
  return it == slots_.end() ? nullptr : &*it->second;
}

bool InstanceWindow::contains(std::string_view subject_key) const {
  return find(subject_key) != nullptr;
}

std::optional<DataInstance> InstanceWindow::remove(std::string_view subject_key) {
  auto it = slots_.find(std::string(subject_key));
  if (it == slots_.end()) return std::nullopt;
  return take(it->second);
}

std::vector<DataInstance> InstanceWindow::drain() {
  std::vector<DataInstance> out;
  out.reserve(order_.size());
  while (!order_.empty()) out.push_back(take(order_.begin()));
  return out;
}

const std::set<Edge>* InstanceWindow::reverse_edges(
    std::string_view object_key) const {
  auto it = reverse_.find(std::string(object_key));
  return it == reverse_.end() ? nullptr : &it->second;
}

}  // namespace fluid
