#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fluid/instance.hpp"

namespace fluid {

// 128-bit BLAKE2b digest of a description's canonical bytes, computed with
// a fixed key. Accidental collisions are expected with probability about
// n^2 / 2^129 for n distinct descriptions.
struct ElementId {
  std::array<std::uint8_t, 16> bytes{};

  std::string hex() const;
  // "urn:fluid:e/<hex>"
  std::string iri() const;
  // "<urn:fluid:e/<hex>>", the form used inside other descriptions.
  std::string key() const;

  static ElementId from_hex(std::string_view hex);  // throws FormatError

  friend auto operator<=>(const ElementId&, const ElementId&) = default;
  friend bool operator==(const ElementId&, const ElementId&) = default;
};

struct ElementIdHash {
  std::size_t operator()(const ElementId& id) const noexcept;
};

// Description components; the layout bitmask records which are present.
enum Component : std::uint8_t {
  kTypes = 1u << 0,
  kProperties = 1u << 1,
  kIncoming = 1u << 2,
  kLinks = 1u << 3,
  kNeighbors = 1u << 4,
  kCliques = 1u << 5,
};

// Canonical structural form of a schema element. Every component is sorted,
// nested elements appear as their keys, and the layout is part of the
// digest. Neither the model name nor the height is, so models that induce
// the same structure (e.g. every type-set model at height 0) share ids.
struct Description {
  std::uint8_t layout = 0;
  std::vector<std::string> types;      // term keys
  std::vector<std::string> properties;  // IRIs
  std::vector<std::string> incoming;    // IRIs
  std::vector<Edge> links;              // (property IRI, object or element key)
  std::vector<std::string> neighbors;   // type keys or element keys

  bool has(Component c) const { return (layout & c) != 0; }

  // Length-prefixed serialization of the layout and present components.
  std::string canonical_bytes() const;
  ElementId id() const;
  // Sorts and deduplicates every component.
  void canonicalize();

  friend auto operator<=>(const Description&, const Description&) = default;
  friend bool operator==(const Description&, const Description&) = default;
};

struct SchemaElement {
  ElementId id;
  Description description;

  static SchemaElement from(Description description);
};

// Key of the element that stands in for unresolvable neighbors.
std::string empty_element_key();

}  // namespace fluid
