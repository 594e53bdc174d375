#include "oracle.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

namespace {

const std::string kType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
const std::string kSubClass = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
const std::string kSubProperty = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
const std::string kDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
const std::string kRange = "http://www.w3.org/2000/01/rdf-schema#range";
const std::string kSameAs = "http://www.w3.org/2002/07/owl#sameAs";

using Graph = std::map<std::string, std::set<std::string>>;

bool literal(const std::string& key) { return !key.empty() && key[0] == '"'; }

// Nodes reachable from `start` over at least one edge.
std::set<std::string> reachable(const Graph& g, const std::string& start) {
  std::set<std::string> seen;
  std::deque<std::string> todo{start};
  while (!todo.empty()) {
    auto cur = todo.front();
    todo.pop_front();
    auto it = g.find(cur);
    if (it == g.end()) continue;
    for (const auto& next : it->second) {
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

// Connected components of an undirected graph given as adjacency lists.
std::map<std::string, std::string> components(const Graph& g) {
  std::map<std::string, std::string> rep;
  for (const auto& [node, _] : g) {
    if (rep.count(node)) continue;
    std::vector<std::string> comp;
    std::deque<std::string> todo{node};
    std::set<std::string> seen{node};
    while (!todo.empty()) {
      auto cur = todo.front();
      todo.pop_front();
      comp.push_back(cur);
      for (const auto& next : g.at(cur)) {
        if (seen.insert(next).second) todo.push_back(next);
      }
    }
    const std::string smallest = *seen.begin();
    for (const auto& c : comp) rep[c] = smallest;
  }
  return rep;
}

struct Instance {
  std::set<std::string> members;  // subjects merged into this instance
  std::set<std::string> types;
  std::set<std::pair<std::string, std::string>> edges;
  std::set<std::string> incoming;
  std::set<std::string> properties;  // edge predicates, after inference
};

class Model {
 public:
  Model(const fluid::ModelConfig& config, std::span<const fluid::Quad> quads) : c_(config) {
    if (c_.rdfs_mode == fluid::InferenceMode::kOnTheFly) {
      throw std::invalid_argument("oracle does not model on-the-fly inference");
    }
    load(quads);
  }

  Partition run() {
    std::map<std::string, std::set<std::string>> blocks;
    if (c_.related_properties && c_.k > 0) {
      for (const auto& [root, members] : weak_cliques()) blocks[root] = members;
    } else {
      for (const auto& [rep, inst] : instances_) {
        auto& block = blocks[schema(inst, c_.k)];
        block.insert(inst.members.begin(), inst.members.end());
      }
    }
    Partition out;
    for (auto& [key, block] : blocks) out.insert(block);
    return out;
  }

 private:
  void load(std::span<const fluid::Quad> quads) {
    std::map<std::string, Instance> raw;
    std::map<std::string, std::set<std::string>> incoming;
    Graph same;
    for (const auto& q : quads) {
      const std::string s = q.subject.to_ntriples();
      const std::string& p = q.predicate.value;
      const std::string o = q.object.to_ntriples();
      Instance& i = raw[s];
      i.members = {s};
      if (p == kType) {
        i.types.insert(o);
      } else {
        i.edges.emplace(p, o);
      }
      if (!literal(o)) incoming[o].insert(p);
      if (p == kSameAs && !literal(o)) {
        same[s].insert(o);
        same[o].insert(s);
      }
      if (q.object.kind == fluid::TermKind::kIri) {
        if (p == kSubClass) sub_class_[s].insert(o);
        if (q.subject.kind == fluid::TermKind::kIri) {
          if (p == kSubProperty) sub_property_[q.subject.value].insert(q.object.value);
          if (p == kDomain) domain_[q.subject.value].insert(o);
          if (p == kRange) range_[q.subject.value].insert(o);
        }
      }
    }
    for (auto& [s, i] : raw) i.incoming = incoming[s];

    std::map<std::string, std::string> rep;
    if (c_.same_as) rep = components(same);
    auto canon = [&](const std::string& key) {
      auto it = rep.find(key);
      return it == rep.end() ? key : it->second;
    };
    for (auto& [s, i] : raw) {
      Instance& merged = instances_[canon(s)];
      merged.members.insert(s);
      merged.types.insert(i.types.begin(), i.types.end());
      for (const auto& [p, o] : i.edges) merged.edges.emplace(p, literal(o) ? o : canon(o));
      merged.incoming.insert(i.incoming.begin(), i.incoming.end());
    }
    canonical_ = rep;
    for (auto& [r, i] : instances_) infer(i);
  }

  void infer(Instance& i) const {
    const bool on = c_.rdfs_mode == fluid::InferenceMode::kPreProcessed;
    std::set<std::pair<std::string, std::string>> extra;
    for (const auto& [p, o] : i.edges) {
      i.properties.insert(p);
      if (!on) continue;
      for (const auto& super : reachable(sub_property_, p)) {
        extra.emplace(super, o);
        i.properties.insert(super);
      }
    }
    i.edges.insert(extra.begin(), extra.end());
    if (!on) return;
    std::set<std::string> types = i.types;
    for (const auto& p : i.properties) {
      if (auto it = domain_.find(p); it != domain_.end()) types.insert(it->second.begin(), it->second.end());
    }
    for (const auto& p : i.incoming) {
      if (auto it = range_.find(p); it != range_.end()) types.insert(it->second.begin(), it->second.end());
    }
    std::set<std::string> closed = types;
    for (const auto& t : types) {
      for (const auto& super : reachable(sub_class_, t)) closed.insert(super);
    }
    i.types = closed;
  }

  const Instance* resolve(const std::string& key) const {
    if (literal(key)) return nullptr;
    auto r = canonical_.find(key);
    auto it = instances_.find(r == canonical_.end() ? key : r->second);
    return it == instances_.end() ? nullptr : &it->second;
  }

  static std::string join(const std::set<std::string>& items) {
    std::string out = "{";
    for (const auto& x : items) out += x + ";";
    return out + "}";
  }

  std::set<std::pair<std::string, std::string>> summarized_edges(const Instance& i) const {
    auto edges = i.edges;
    if (!c_.use_type_set) {
      for (const auto& t : i.types) edges.emplace(kType, t);
    }
    return edges;
  }

  std::string ref(const std::string& object, int h) const {
    const Instance* n = resolve(object);
    return n == nullptr ? "EMPTY" : "(" + schema(*n, h) + ")";
  }

  std::string schema(const Instance& i, int h) const {
    if (h == 0) return "T" + join(i.types);
    std::string out;
    if (c_.use_type_set) out += "T" + join(i.types);
    if (c_.use_incoming_property_set) out += "I" + join(i.incoming);
    const auto edges = summarized_edges(i);
    std::set<std::string> props;
    for (const auto& [p, o] : edges) props.insert(p);
    std::set<std::string> links;
    switch (c_.neighbor_mode) {
      case fluid::NeighborMode::kObjectIdentity:
        for (const auto& [p, o] : edges) links.insert(p + "=" + o);
        return out + "L" + join(links);
      case fluid::NeighborMode::kNeighborSchema:
        for (const auto& [p, o] : edges) links.insert(p + "=" + ref(o, h - 1));
        return out + "L" + join(links);
      case fluid::NeighborMode::kAggregatedNeighborTypes: {
        if (c_.use_property_set) out += "P" + join(props);
        std::set<std::string> neighbors;
        for (const auto& [p, o] : edges) {
          if (h == 1) {
            if (const Instance* n = resolve(o)) neighbors.insert(n->types.begin(), n->types.end());
          } else {
            neighbors.insert(ref(o, h - 1));
          }
        }
        return out + "N" + join(neighbors);
      }
      case fluid::NeighborMode::kNone:
        if (h == 1) return c_.use_property_set ? out + "P" + join(props) : out;
        for (const auto& [p, o] : edges) links.insert(p + "=" + ref(o, h - 1));
        return out + "L" + join(links);
    }
    return out;
  }

  // Instances joined through a shared outgoing or incoming property clique.
  std::map<std::string, std::set<std::string>> weak_cliques() const {
    std::map<std::string, std::set<std::string>> out_sets;
    Graph out_graph;
    Graph in_graph;
    for (const auto& [r, i] : instances_) {
      auto props = i.properties;
      if (!c_.use_type_set && !i.types.empty()) props.insert(kType);
      out_sets[r] = props;
      for (const auto& a : props) {
        out_graph[a];
        for (const auto& b : props) out_graph[a].insert(b);
      }
      for (const auto& a : i.incoming) {
        in_graph[a];
        for (const auto& b : i.incoming) in_graph[a].insert(b);
      }
    }
    const auto out_clique = components(out_graph);
    const auto in_clique = components(in_graph);

    Graph or_graph;
    for (const auto& [r, i] : instances_) {
      const std::string node = "inst:" + r;
      or_graph[node];
      for (const auto& p : out_sets.at(r)) {
        const std::string c = "out:" + out_clique.at(p);
        or_graph[node].insert(c);
        or_graph[c].insert(node);
      }
      for (const auto& p : i.incoming) {
        const std::string c = "in:" + in_clique.at(p);
        or_graph[node].insert(c);
        or_graph[c].insert(node);
      }
    }
    std::map<std::string, std::set<std::string>> blocks;
    for (const auto& [node, root] : components(or_graph)) {
      if (node.rfind("inst:", 0) != 0) continue;
      const Instance& i = instances_.at(node.substr(5));
      blocks[root].insert(i.members.begin(), i.members.end());
    }
    return blocks;
  }

  const fluid::ModelConfig& c_;
  std::map<std::string, Instance> instances_;
  std::map<std::string, std::string> canonical_;
  Graph sub_class_;
  Graph sub_property_;
  Graph domain_;
  Graph range_;
};

}  // namespace

Partition partition(const fluid::ModelConfig& config, std::span<const fluid::Quad> quads) {
  return Model(config, quads).run();
}

}  // namespace oracle
