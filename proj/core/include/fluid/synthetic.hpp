#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fluid/term.hpp"

namespace fluid {

enum class RdfsPosition { kFirst, kLast, kMixed };

std::string_view to_string(RdfsPosition position);
RdfsPosition rdfs_position_from_string(std::string_view text);  // throws InvalidConfig

// Seeded random corpus. Each type owns a property profile; a profile
// property links to instances of one target type (chance `link_rate`) or
// takes literals. Instances draw a skewed primary type and keep each
// profile property with `property_rate`.
struct SyntheticOptions {
  std::uint64_t instances = 1000;
  std::uint32_t types = 20;
  std::uint32_t properties = 30;
  std::uint32_t sources = 10;
  std::uint64_t seed = 1;

  std::uint32_t profile_size = 5;    // properties per type profile
  double property_rate = 0.95;       // chance a profile property is used
  double extra_property_rate = 0.02; // chance of one property outside the profile
  double extra_type_rate = 0.05;     // chance of a second type
  double untyped_rate = 0.02;
  double link_rate = 0.5;            // profile property links to instances
  // Link targets are drawn among instances of the target type at most this
  // many positions away (0: anywhere), mimicking documents that mostly
  // reference nearby resources.
  std::uint64_t link_span = 0;
  double fan_out_rate = 0.1;         // chance of each further value of a property
  double blank_rate = 0.0;           // subjects that are blank nodes
  double extra_source_rate = 0.1;    // statements stored outside the home source
  double same_as_rate = 0.0;         // instances with an owl:sameAs link
  double rdfs_rate = 0.0;            // types/properties with an RDFS axiom
  RdfsPosition rdfs_position = RdfsPosition::kFirst;
  // Statements of instance i are shuffled among instances i..i+spread.
  std::uint32_t interleave = 0;
  std::string ns = "http://example.org/";
};

std::vector<Quad> generate_synthetic(const SyntheticOptions& options);

void write_nquads(std::ostream& out, std::span<const Quad> quads);

}  // namespace fluid
