#include "fluid/index.hpp"

#include <algorithm>
#include <set>
#include <variant>

#include "fluid/errors.hpp"
#include "fluid/nquads.hpp"
#include "fluid/vocab.hpp"

namespace fluid {

void Index::record(const SchemaElement& element, const StringSet& sources) {
  if (sources.empty()) {
    throw EmptySources("schema element " + element.id.hex() + " recorded without data sources");
  }
  auto [it, inserted] = elements_.try_emplace(element.id);
  Payload& payload = it->second;
  if (inserted) payload.description = element.description;
  payload.sources.insert(sources.begin(), sources.end());
  ++payload.instance_count;
  finalized_ = false;
}

void Index::restore(const ElementId& id, Payload payload) {
  elements_[id] = std::move(payload);
  finalized_ = true;
}

void Index::finalize(const PropertyCliques* cliques) {
  if (finalized_) return;
  const bool clique_layout = std::any_of(elements_.begin(), elements_.end(), [](const auto& e) {
    return e.second.description.has(kCliques);
  });
  if (clique_layout) {
    if (cliques == nullptr) {
      throw MissingCliques("index holds related-property elements but no clique partition was given");
    }
    merge_cliques(*cliques);
  }
  finalized_ = true;
}

void Index::merge_cliques(const PropertyCliques& cliques) {
  // Nodes: "o\t<outgoing clique>", "i\t<incoming clique>". Each element
  // joins its two cliques, so connected components are the OR-classes.
  StringUnionFind graph;
  std::map<ElementId, std::vector<std::string>> nodes;
  for (const auto& [id, payload] : elements_) {
    std::vector<std::string>& mine = nodes[id];
    for (const auto& p : payload.description.properties) {
      mine.push_back("o\t" + cliques.outgoing_clique(p));
    }
    for (const auto& p : payload.description.incoming) {
      mine.push_back("i\t" + cliques.incoming_clique(p));
    }
    if (mine.empty()) mine.push_back("x\t" + id.hex());
    graph.add(mine.front());
    for (const auto& n : mine) graph.unite(mine.front(), n);
  }

  struct Component {
    StringSet outgoing;
    StringSet incoming;
    Payload payload;
    std::vector<ElementId> recorded;
  };
  std::map<std::string, Component> components;
  for (auto& [id, payload] : elements_) {
    const auto& mine = nodes[id];
    Component& c = components[graph.find(mine.front())];
    for (const auto& n : mine) {
      const std::string rep = n.substr(2);
      if (n[0] == 'o') {
        for (auto& m : cliques.outgoing().members(rep)) c.outgoing.insert(std::move(m));
      } else if (n[0] == 'i') {
        for (auto& m : cliques.incoming().members(rep)) c.incoming.insert(std::move(m));
      }
    }
    c.payload.sources.insert(payload.sources.begin(), payload.sources.end());
    c.payload.instance_count += payload.instance_count;
    c.recorded.push_back(id);
  }

  std::map<ElementId, Payload> merged;
  std::map<ElementId, ElementId> redirects;
  for (auto& [root, c] : components) {
    Description d;
    d.layout = kCliques;
    d.properties.assign(c.outgoing.begin(), c.outgoing.end());
    d.incoming.assign(c.incoming.begin(), c.incoming.end());
    SchemaElement element = SchemaElement::from(std::move(d));
    c.payload.description = element.description;
    for (const auto& old : c.recorded) redirects[old] = element.id;
    Payload& target = merged[element.id];
    target.description = c.payload.description;
    target.sources.insert(c.payload.sources.begin(), c.payload.sources.end());
    target.instance_count += c.payload.instance_count;
  }
  // Chain earlier redirects so resolve() stays one hop.
  for (auto& [from, to] : redirects_) {
    auto it = redirects.find(to);
    if (it != redirects.end()) to = it->second;
  }
  for (auto& [from, to] : redirects) redirects_[from] = to;
  elements_ = std::move(merged);
}

ElementId Index::resolve(const ElementId& recorded) const {
  auto it = redirects_.find(recorded);
  return it == redirects_.end() ? recorded : it->second;
}

const Payload* Index::find(const ElementId& id) const {
  auto it = elements_.find(id);
  return it == elements_.end() ? nullptr : &it->second;
}

namespace {

std::string iri_term(std::string_view iri) { return "<" + std::string(iri) + ">"; }

std::string line(const std::string& s, const std::string& p, const std::string& o) {
  std::string out;
  out.reserve(s.size() + p.size() + o.size() + 4);
  out += s;
  out += ' ';
  out += p;
  out += ' ';
  out += o;
  out += " .";
  return out;
}

}  // namespace

std::vector<std::string> serialize_rdf(const Index& index) {
  const std::string a = iri_term(vocab::kRdfType);
  const std::string schema_element = iri_term(vocab::kSchemaElement);
  const std::string has_type = iri_term(vocab::kHasType);
  const std::string has_property = iri_term(vocab::kHasProperty);
  const std::string has_incoming = iri_term(vocab::kHasIncomingProperty);
  const std::string has_neighbor = iri_term(vocab::kHasNeighbor);
  const std::string found_in = iri_term(vocab::kFoundIn);

  std::vector<std::string> lines;
  for (const auto& [id, payload] : index.elements()) {
    const std::string e = id.key();
    const Description& d = payload.description;
    lines.push_back(line(e, a, schema_element));
    for (const auto& t : d.types) lines.push_back(line(e, has_type, t));
    for (const auto& p : d.properties) lines.push_back(line(e, has_property, iri_term(p)));
    for (const auto& p : d.incoming) lines.push_back(line(e, has_incoming, iri_term(p)));
    for (const auto& [p, o] : d.links) lines.push_back(line(e, iri_term(p), o));
    for (const auto& n : d.neighbors) lines.push_back(line(e, has_neighbor, n));
    for (const auto& s : payload.sources) lines.push_back(line(e, found_in, iri_term(s)));
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

std::uint64_t count_rdf_triples(const Index& index) {
  std::uint64_t n = 0;
  for (const auto& [id, payload] : index.elements()) {
    const Description& d = payload.description;
    n += 1 + d.types.size() + d.properties.size() + d.incoming.size() + d.links.size() +
         d.neighbors.size() + payload.sources.size();
  }
  return n;
}

Index parse_rdf(std::span<const std::string> lines, IndexMeta meta,
                const std::map<ElementId, std::uint64_t>& instance_counts) {
  const std::uint8_t layout = layout_for(meta.config);
  const std::string element_prefix(vocab::kElementPrefix);
  std::map<ElementId, Payload> parsed;
  std::set<ElementId> declared;
  std::uint64_t line_number = 0;
  for (const auto& text : lines) {
    ++line_number;
    auto result = parse_line(text, line_number, ParseOptions{});
    if (std::holds_alternative<SkippedLine>(result)) continue;
    if (const auto* err = std::get_if<ParseError>(&result)) {
      throw FormatError("index line " + std::to_string(err->line) + ": " + err->reason);
    }
    const Quad& q = std::get<Quad>(result);
    if (q.subject.kind != TermKind::kIri || !q.subject.value.starts_with(element_prefix)) {
      throw FormatError("index line " + std::to_string(line_number) +
                        ": subject is not a schema element");
    }
    const ElementId id = ElementId::from_hex(
        std::string_view(q.subject.value).substr(element_prefix.size()));
    Payload& payload = parsed[id];
    Description& d = payload.description;
    const std::string& p = q.predicate.value;
    const std::string object = q.object.to_ntriples();
    auto need_iri = [&] {
      if (q.object.kind != TermKind::kIri) {
        throw FormatError("index line " + std::to_string(line_number) + ": IRI object expected");
      }
    };
    if (p == vocab::kRdfType && q.object.kind == TermKind::kIri &&
        q.object.value == vocab::kSchemaElement) {
      declared.insert(id);
    } else if (p == vocab::kHasType) {
      d.types.push_back(object);
    } else if (p == vocab::kHasProperty) {
      need_iri();
      d.properties.push_back(q.object.value);
    } else if (p == vocab::kHasIncomingProperty) {
      need_iri();
      d.incoming.push_back(q.object.value);
    } else if (p == vocab::kHasNeighbor) {
      d.neighbors.push_back(object);
    } else if (p == vocab::kFoundIn) {
      need_iri();
      payload.sources.insert(q.object.value);
    } else {
      d.links.emplace_back(p, object);
    }
  }

  Index index(std::move(meta));
  for (auto& [id, payload] : parsed) {
    if (!declared.contains(id)) {
      throw FormatError("schema element " + id.hex() + " lacks its rdf:type declaration");
    }
    if (payload.sources.empty()) {
      throw FormatError("schema element " + id.hex() + " has no data sources");
    }
    payload.description.layout = layout;
    payload.description.canonicalize();
    if (payload.description.id() != id) {
      throw FormatError("schema element " + id.hex() + " does not match its description");
    }
    auto count = instance_counts.find(id);
    payload.instance_count = count == instance_counts.end() ? 1 : count->second;
    index.restore(id, std::move(payload));
  }
  index.finalize();
  return index;
}

IndexMetrics compute_metrics(const Index& index, const DatasetStats& stats) {
  if (stats.triple_count == 0 || stats.instance_count == 0) {
    throw DivisionByZero("dataset has no triples or no instances");
  }
  IndexMetrics m;
  m.triple_count = count_rdf_triples(index);
  m.element_count = index.element_count();
  m.compression_ratio =
      static_cast<double>(m.triple_count) / static_cast<double>(stats.triple_count);
  m.summarization_ratio =
      static_cast<double>(m.element_count) / static_cast<double>(stats.instance_count);
  return m;
}

nlohmann::json to_json(const IndexMetrics& metrics) {
  return {{"index_triples", metrics.triple_count},
          {"schema_elements", metrics.element_count},
          {"compression_ratio", metrics.compression_ratio},
          {"summarization_ratio", metrics.summarization_ratio}};
}

}  // namespace fluid
