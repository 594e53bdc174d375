#include "fluid/description.hpp"

#include <sodium.h>

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "fluid/errors.hpp"
#include "fluid/vocab.hpp"

namespace fluid {
namespace {

constexpr std::string_view kDigestKey = "fluid.schema-element.v1";

void ensure_sodium() {
  static const bool ready = [] {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
    return true;
  }();
  (void)ready;
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((v >> shift) & 0xFF));
  }
}

void put_string(std::string& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.append(s);
}

void put_strings(std::string& out, const std::vector<std::string>& v) {
  put_u32(out, static_cast<std::uint32_t>(v.size()));
  for (const auto& s : v) put_string(out, s);
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

std::string ElementId::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(32, '0');
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    out[2 * i] = kDigits[bytes[i] >> 4];
    out[2 * i + 1] = kDigits[bytes[i] & 0xF];
  }
  return out;
}

std::string ElementId::iri() const {
  return std::string(vocab::kElementPrefix) + hex();
}

std::string ElementId::key() const { return "<" + iri() + ">"; }

ElementId ElementId::from_hex(std::string_view hex) {
  if (hex.size() != 32) throw FormatError("element id must have 32 hex digits");
  ElementId id;
  for (std::size_t i = 0; i < 16; ++i) {
    int hi = hex_digit(hex[2 * i]);
    int lo = hex_digit(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("element id must be lowercase hex");
    id.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return id;
}

std::size_t ElementIdHash::operator()(const ElementId& id) const noexcept {
  std::size_t h;
  std::memcpy(&h, id.bytes.data(), sizeof(h));
  return h;
}

std::string Description::canonical_bytes() const {
  std::string out;
  out.push_back(static_cast<char>(layout));
  if (has(kTypes)) put_strings(out, types);
  if (has(kProperties) || has(kCliques)) put_strings(out, properties);
  if (has(kIncoming) || has(kCliques)) put_strings(out, incoming);
  if (has(kLinks)) {
    put_u32(out, static_cast<std::uint32_t>(links.size()));
    for (const auto& [p, ref] : links) {
      put_string(out, p);
      put_string(out, ref);
    }
  }
  if (has(kNeighbors)) put_strings(out, neighbors);
  return out;
}

ElementId Description::id() const {
  ensure_sodium();
  const std::string bytes = canonical_bytes();
  ElementId id;
  crypto_generichash(id.bytes.data(), id.bytes.size(),
                     reinterpret_cast<const unsigned char*>(bytes.data()),
                     bytes.size(),
                     reinterpret_cast<const unsigned char*>(kDigestKey.data()),
                     kDigestKey.size());
  return id;
}

void Description::canonicalize() {
  sort_unique(types);
  sort_unique(properties);
  sort_unique(incoming);
  sort_unique(links);
  sort_unique(neighbors);
}

SchemaElement SchemaElement::from(Description description) {
  description.canonicalize();
  ElementId id = description.id();
  return SchemaElement{id, std::move(description)};
}

std::string empty_element_key() {
  return "<" + std::string(vocab::kEmptyElement) + ">";
}

}  // namespace fluid
