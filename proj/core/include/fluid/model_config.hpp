#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fluid/schema_graph.hpp"

namespace fluid {

enum class NeighborMode {
  kNone,
  kObjectIdentity,          // object term itself (SemSets)
  kNeighborSchema,          // per-property neighbor element (SchemEX)
  kAggregatedNeighborTypes  // neighbor types pooled over all properties (TermPicker)
};

std::string_view to_string(NeighborMode mode);
NeighborMode neighbor_mode_from_string(std::string_view text);

// Feature flags plus height that define one index model.
struct ModelConfig {
  std::string name = "custom";
  bool use_property_set = false;
  bool use_type_set = false;
  bool use_incoming_property_set = false;
  NeighborMode neighbor_mode = NeighborMode::kNone;
  bool or_combination = false;
  bool related_properties = false;
  InferenceMode rdfs_mode = InferenceMode::kNone;
  bool same_as = false;
  int k = 1;

  // Throws InvalidConfig for k outside {0,1,2} or OR without related
  // properties.
  void validate() const;

  // Height 0 needs something to summarize by: a type set, or the rdf:type
  // objects of an object-identity model.
  bool height_applicable() const;
  // Throws InapplicableHeight when !height_applicable().
  void require_applicable_height() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

const std::vector<std::string_view>& preset_names();
// Throws UnknownPreset.
ModelConfig preset(std::string_view name, int k);

// Applies one `key = value` override (see README for the key list).
void apply_override(ModelConfig& config, std::string_view key, std::string_view value);
// Key-value file: optional `preset = <name>`, `k = <n>`, then overrides.
// '#' starts a comment.
ModelConfig load_model_config(std::istream& in);

// Same model family and height: equal in every flag except the inference
// mode, which only changes how completely the same structure is computed.
bool compatible(const ModelConfig& a, const ModelConfig& b);

nlohmann::json to_json(const ModelConfig& config);
ModelConfig model_config_from_json(const nlohmann::json& j);

}  // namespace fluid
