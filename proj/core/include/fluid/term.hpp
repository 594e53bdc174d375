#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fluid {

enum class TermKind : std::uint8_t { kIri, kBlankNode, kLiteral };

// One RDF term. `value` holds the IRI, the blank-node label (without "_:") or
// the literal's lexical form. `datatype` and `language` are empty unless the
// term is a literal that carries them.
struct Term {
  TermKind kind = TermKind::kIri;
  std::string value;
  std::string datatype;
  std::string language;

  static Term iri(std::string value);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = {},
                      std::string language = {});

  bool is_iri() const { return kind == TermKind::kIri; }
  bool is_blank() const { return kind == TermKind::kBlankNode; }
  bool is_literal() const { return kind == TermKind::kLiteral; }

  // Canonical N-Triples rendering. Two terms are equal iff their renderings
  // are equal, so the rendering doubles as the term's identity key.
  std::string to_ntriples() const;

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

// Term keys are N-Triples renderings; the first byte tells the kind.
inline bool key_is_literal(std::string_view key) {
  return !key.empty() && key.front() == '"';
}
inline bool key_is_iri(std::string_view key) {
  return !key.empty() && key.front() == '<';
}
inline bool key_is_blank(std::string_view key) {
  return key.size() > 2 && key.starts_with("_:");
}

std::string iri_key(std::string_view iri);

// True for an absolute IRI: a scheme followed by ':' and no characters that
// the N-Triples IRIREF production forbids.
bool is_absolute_iri(std::string_view iri);

struct Quad {
  Term subject;
  Term predicate;
  Term object;
  Term context;

  friend bool operator==(const Quad&, const Quad&) = default;
};

}  // namespace fluid
