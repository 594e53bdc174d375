#include "fluid/schema_graph.hpp"

#include <deque>
#include <istream>
#include <ostream>
#include <string>

#include "fluid/errors.hpp"
#include "fluid/nquads.hpp"
#include "fluid/vocab.hpp"

namespace fluid {

std::string_view to_string(InferenceMode mode) {
  switch (mode) {
    case InferenceMode::kNone:
      return "none";
    case InferenceMode::kOnTheFly:
      return "otf";
    case InferenceMode::kPreProcessed:
      return "pre";
  }
  return "none";
}

InferenceMode inference_mode_from_string(std::string_view text) {
  if (text == "none") return InferenceMode::kNone;
  if (text == "otf" || text == "on-the-fly") return InferenceMode::kOnTheFly;
  if (text == "pre" || text == "pre-processed") return InferenceMode::kPreProcessed;
  throw InvalidConfig("unknown inference mode '" + std::string(text) + "'");
}

namespace {

std::string_view relation_name(SchemaRelation r) {
  switch (r) {
    case SchemaRelation::kSubClassOf:
      return "subClassOf";
    case SchemaRelation::kSubPropertyOf:
      return "subPropertyOf";
    case SchemaRelation::kDomain:
      return "domain";
    case SchemaRelation::kRange:
      return "range";
  }
  return "";
}

}  // namespace

bool SchemaGraph::ingest(const Quad& q) {
  if (!q.object.is_iri()) return false;
  const std::string& p = q.predicate.value;
  std::string object_key = q.object.to_ntriples();
  if (p == vocab::kRdfsSubClassOf) {
    if (q.subject.is_literal()) return false;
    return add(SchemaRelation::kSubClassOf, q.subject.to_ntriples(), object_key);
  }
  if (!q.subject.is_iri()) return false;
  if (p == vocab::kRdfsSubPropertyOf) {
    return add(SchemaRelation::kSubPropertyOf, q.subject.value, q.object.value);
  }
  if (p == vocab::kRdfsDomain) {
    return add(SchemaRelation::kDomain, q.subject.value, object_key);
  }
  if (p == vocab::kRdfsRange) {
    return add(SchemaRelation::kRange, q.subject.value, object_key);
  }
  return false;
}

bool SchemaGraph::add(SchemaRelation relation, const std::string& subject,
                      const std::string& object) {
  Relation* target = nullptr;
  switch (relation) {
    case SchemaRelation::kSubClassOf:
      target = &sub_class_of_;
      break;
    case SchemaRelation::kSubPropertyOf:
      target = &sub_property_of_;
      break;
    case SchemaRelation::kDomain:
      target = &domain_;
      break;
    case SchemaRelation::kRange:
      target = &range_;
      break;
  }
  const bool changed = (*target)[subject].insert(object).second;
  if (changed) thaw();
  return changed;
}

void SchemaGraph::thaw() {
  if (!frozen_) return;
  frozen_ = false;
  class_closure_.clear();
  property_closure_.clear();
}

StringSet SchemaGraph::closure(const Relation& edges, const std::string& start) {
  StringSet reached;
  std::deque<std::string> frontier;
  auto expand = [&](const std::string& node) {
    auto it = edges.find(node);
    if (it == edges.end()) return;
    for (const auto& next : it->second) {
      if (reached.insert(next).second) frontier.push_back(next);
    }
  };
  expand(start);
  while (!frontier.empty()) {
    std::string node = std::move(frontier.front());
    frontier.pop_front();
    expand(node);
  }
  return reached;
}

StringSet SchemaGraph::super_classes(const std::string& class_key) const {
  if (frozen_) {
    auto it = class_closure_.find(class_key);
    return it == class_closure_.end() ? StringSet{} : it->second;
  }
  return closure(sub_class_of_, class_key);
}

StringSet SchemaGraph::super_properties(const std::string& property) const {
  if (frozen_) {
    auto it = property_closure_.find(property);
    return it == property_closure_.end() ? StringSet{} : it->second;
  }
  return closure(sub_property_of_, property);
}

const StringSet* SchemaGraph::domain(const std::string& property) const {
  auto it = domain_.find(property);
  return it == domain_.end() ? nullptr : &it->second;
}

const StringSet* SchemaGraph::range(const std::string& property) const {
  auto it = range_.find(property);
  return it == range_.end() ? nullptr : &it->second;
}

bool SchemaGraph::empty() const {
  return sub_class_of_.empty() && sub_property_of_.empty() && domain_.empty() &&
         range_.empty();
}

std::size_t SchemaGraph::size() const {
  std::size_t n = 0;
  for (const Relation* r : {&sub_class_of_, &sub_property_of_, &domain_, &range_}) {
    for (const auto& [k, v] : *r) n += v.size();
  }
  return n;
}

void SchemaGraph::freeze() {
  if (frozen_) return;
  class_closure_.clear();
  property_closure_.clear();
  for (const auto& [node, supers] : sub_class_of_) {
    class_closure_.emplace(node, closure(sub_class_of_, node));
  }
  for (const auto& [node, supers] : sub_property_of_) {
    property_closure_.emplace(node, closure(sub_property_of_, node));
  }
  frozen_ = true;
}

void SchemaGraph::write_snapshot(std::ostream& out) const {
  auto emit = [&out](SchemaRelation r, const Relation& rel, bool subject_is_iri,
                     bool object_is_iri) {
    for (const auto& [s, objects] : rel) {
      for (const auto& o : objects) {
        out << relation_name(r) << '\t' << (subject_is_iri ? iri_key(s) : s)
            << '\t' << (object_is_iri ? iri_key(o) : o) << '\n';
      }
    }
  };
  emit(SchemaRelation::kSubClassOf, sub_class_of_, false, false);
  emit(SchemaRelation::kSubPropertyOf, sub_property_of_, true, true);
  emit(SchemaRelation::kDomain, domain_, true, false);
  emit(SchemaRelation::kRange, range_, true, false);
}

SchemaGraph SchemaGraph::read_snapshot(std::istream& in) {
  SchemaGraph graph;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fail = [&](const char* why) {
      return FormatError("schema snapshot line " + std::to_string(line_number) +
                         ": " + why);
    };
    const auto tab1 = line.find('\t');
    const auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) throw fail("expected three tab-separated fields");
    const std::string name = line.substr(0, tab1);
    auto subject = parse_term(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1));
    auto object = parse_term(std::string_view(line).substr(tab2 + 1));
    if (!subject || !object) throw fail("malformed term");
    if (name == "subClassOf") {
      graph.add(SchemaRelation::kSubClassOf, subject->to_ntriples(), object->to_ntriples());
    } else if (name == "subPropertyOf") {
      if (!subject->is_iri() || !object->is_iri()) throw fail("property must be an IRI");
      graph.add(SchemaRelation::kSubPropertyOf, subject->value, object->value);
    } else if (name == "domain" || name == "range") {
      if (!subject->is_iri()) throw fail("property must be an IRI");
      graph.add(name == "domain" ? SchemaRelation::kDomain : SchemaRelation::kRange,
                subject->value, object->to_ntriples());
    } else {
      throw fail("unknown relation");
    }
  }
  return graph;
}

bool ingest_schema_quad(SchemaGraph& graph, const Quad& q) { return graph.ingest(q); }

void enrich_instance(const SchemaGraph& graph, DataInstance& instance) {
  if (graph.empty()) return;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, o] : instance.edges) {
      for (const auto& super : graph.super_properties(p)) {
        changed |= instance.inferred_properties.insert(super).second;
        changed |= instance.inferred_edges.emplace(super, o).second;
      }
    }
    for (const auto& p : property_set(instance)) {
      if (const StringSet* classes = graph.domain(p)) {
        for (const auto& c : *classes) changed |= instance.inferred_types.insert(c).second;
      }
    }
    for (const auto& p : instance.incoming) {
      if (const StringSet* classes = graph.range(p)) {
        for (const auto& c : *classes) changed |= instance.inferred_types.insert(c).second;
      }
    }
    for (const auto& t : effective_type_set(instance)) {
      for (const auto& super : graph.super_classes(t)) {
        changed |= instance.inferred_types.insert(super).second;
      }
    }
  }
}

DataInstance enriched(const SchemaGraph& graph, DataInstance instance) {
  enrich_instance(graph, instance);
  return instance;
}

}  // namespace fluid
