#include "fluid/term.hpp"

#include <utility>

namespace fluid {

Term Term::iri(std::string value) {
  return Term{TermKind::kIri, std::move(value), {}, {}};
}

Term Term::blank(std::string label) {
  return Term{TermKind::kBlankNode, std::move(label), {}, {}};
}

Term Term::literal(std::string lexical, std::string datatype,
                   std::string language) {
  return Term{TermKind::kLiteral, std::move(lexical), std::move(datatype),
              std::move(language)};
}

std::string iri_key(std::string_view iri) {
  std::string out;
  out.reserve(iri.size() + 2);
  out.push_back('<');
  out.append(iri);
  out.push_back('>');
  return out;
}

std::string Term::to_ntriples() const {
  switch (kind) {
    case TermKind::kIri:
      return iri_key(value);
    case TermKind::kBlankNode:
      return "_:" + value;
    case TermKind::kLiteral:
      break;
  }
  std::string out;
  out.reserve(value.size() + datatype.size() + language.size() + 6);
  out.push_back('"');
  for (char c : value) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  if (!language.empty()) {
    out.push_back('@');
    out += language;
  } else if (!datatype.empty()) {
    out += "^^";
    out += iri_key(datatype);
  }
  return out;
}

namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool forbidden_in_iri(unsigned char c) {
  if (c <= 0x20) return true;
  switch (c) {
    case '<':
    case '>':
    case '"':
    case '{':
    case '}':
    case '|':
    case '^':
    case '`':
    case '\\':
      return true;
    default:
      return false;
  }
}

}  // namespace

bool is_absolute_iri(std::string_view iri) {
  if (iri.empty() || !is_alpha(iri.front())) return false;
  std::size_t i = 1;
  while (i < iri.size() && (is_alpha(iri[i]) || is_digit(iri[i]) ||
                            iri[i] == '+' || iri[i] == '-' || iri[i] == '.')) {
    ++i;
  }
  if (i >= iri.size() || iri[i] != ':') return false;
  for (unsigned char c : iri) {
    if (forbidden_in_iri(c)) return false;
  }
  return true;
}

}  // namespace fluid
