#include "fluid/model_config.hpp"

#include <istream>
#include <map>
#include <optional>
#include <utility>

#include "fluid/errors.hpp"

namespace fluid {

std::string_view to_string(NeighborMode mode) {
  switch (mode) {
    case NeighborMode::kNone:
      return "none";
    case NeighborMode::kObjectIdentity:
      return "object-identity";
    case NeighborMode::kNeighborSchema:
      return "neighbor-schema";
    case NeighborMode::kAggregatedNeighborTypes:
      return "aggregated-neighbor-types";
  }
  return "none";
}

NeighborMode neighbor_mode_from_string(std::string_view text) {
  for (NeighborMode m : {NeighborMode::kNone, NeighborMode::kObjectIdentity,
                         NeighborMode::kNeighborSchema,
                         NeighborMode::kAggregatedNeighborTypes}) {
    if (text == to_string(m)) return m;
  }
  throw InvalidConfig("unknown neighbor mode '" + std::string(text) + "'");
}

void ModelConfig::validate() const {
  if (k < 0 || k > 2) {
    throw InvalidConfig("height k must be 0, 1 or 2 (got " + std::to_string(k) + ")");
  }
  if (or_combination && !related_properties) {
    throw InvalidConfig("OR combination requires related properties");
  }
}

bool ModelConfig::height_applicable() const {
  return k > 0 || use_type_set || neighbor_mode == NeighborMode::kObjectIdentity;
}

void ModelConfig::require_applicable_height() const {
  if (!height_applicable()) {
    throw InapplicableHeight("height 0 inapplicable for model '" + name +
                             "': it uses neither type sets nor rdf:type objects");
  }
}

const std::vector<std::string_view>& preset_names() {
  static const std::vector<std::string_view> names = {
      "characteristic-sets", "semsets", "weak-property-clique",
      "schemex",             "termpicker", "schemex-u-i"};
  return names;
}

ModelConfig preset(std::string_view name, int k) {
  ModelConfig c;
  c.name = std::string(name);
  c.k = k;
  if (name == "characteristic-sets") {
    c.use_property_set = true;
    c.use_incoming_property_set = true;
  } else if (name == "semsets") {
    c.use_property_set = true;
    c.neighbor_mode = NeighborMode::kObjectIdentity;
  } else if (name == "weak-property-clique") {
    c.use_property_set = true;
    c.use_incoming_property_set = true;
    c.related_properties = true;
    c.or_combination = true;
    c.rdfs_mode = InferenceMode::kPreProcessed;
  } else if (name == "schemex") {
    c.use_type_set = true;
    c.use_property_set = true;
    c.neighbor_mode = NeighborMode::kNeighborSchema;
  } else if (name == "termpicker") {
    c.use_type_set = true;
    c.use_property_set = true;
    c.neighbor_mode = NeighborMode::kAggregatedNeighborTypes;
  } else if (name == "schemex-u-i") {
    c.use_type_set = true;
    c.use_property_set = true;
    c.neighbor_mode = NeighborMode::kNeighborSchema;
    c.rdfs_mode = InferenceMode::kPreProcessed;
    c.same_as = true;
  } else {
    throw UnknownPreset("unknown model preset '" + std::string(name) + "'");
  }
  c.validate();
  return c;
}

namespace {

bool parse_flag(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
  if (value == "false" || value == "0" || value == "no" || value == "off") return false;
  throw InvalidConfig("'" + std::string(key) + "' expects a boolean, got '" +
                      std::string(value) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_height(std::string_view value) {
  if (value == "0") return 0;
  if (value == "1") return 1;
  if (value == "2") return 2;
  throw InvalidConfig("height k must be 0, 1 or 2 (got '" + std::string(value) + "')");
}

}  // namespace

void apply_override(ModelConfig& c, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "k") {
    c.k = parse_height(value);
  } else if (key == "property_set") {
    c.use_property_set = parse_flag(key, value);
  } else if (key == "type_set") {
    c.use_type_set = parse_flag(key, value);
  } else if (key == "incoming_property_set") {
    c.use_incoming_property_set = parse_flag(key, value);
  } else if (key == "neighbor") {
    c.neighbor_mode = neighbor_mode_from_string(value);
  } else if (key == "or_combination") {
    c.or_combination = parse_flag(key, value);
  } else if (key == "related_properties") {
    c.related_properties = parse_flag(key, value);
  } else if (key == "rdfs" || key == "inference") {
    c.rdfs_mode = inference_mode_from_string(value);
  } else if (key == "same_as") {
    c.same_as = parse_flag(key, value);
  } else if (key == "name") {
    c.name = std::string(value);
  } else {
    throw InvalidConfig("unknown model option '" + std::string(key) + "'");
  }
}

ModelConfig load_model_config(std::istream& in) {
  std::optional<std::string> preset_name;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidConfig("config line " + std::to_string(line_number) +
                          ": expected key = value");
    }
    std::string key(trim(view.substr(0, eq)));
    std::string value(trim(view.substr(eq + 1)));
    if (key == "preset") {
      preset_name = value;
    } else {
      overrides.emplace_back(std::move(key), std::move(value));
    }
  }
  ModelConfig config = preset_name ? preset(*preset_name, 1) : ModelConfig{};
  for (const auto& [key, value] : overrides) apply_override(config, key, value);
  config.validate();
  return config;
}

bool compatible(const ModelConfig& a, const ModelConfig& b) {
  ModelConfig x = a;
  ModelConfig y = b;
  x.rdfs_mode = y.rdfs_mode = InferenceMode::kNone;
  x.name = y.name = "";
  return x == y;
}

nlohmann::json to_json(const ModelConfig& c) {
  return {{"name", c.name},
          {"k", c.k},
          {"property_set", c.use_property_set},
          {"type_set", c.use_type_set},
          {"incoming_property_set", c.use_incoming_property_set},
          {"neighbor", std::string(to_string(c.neighbor_mode))},
          {"or_combination", c.or_combination},
          {"related_properties", c.related_properties},
          {"rdfs", std::string(to_string(c.rdfs_mode))},
          {"same_as", c.same_as}};
}

ModelConfig model_config_from_json(const nlohmann::json& j) {
  try {
    ModelConfig c;
    c.name = j.at("name").get<std::string>();
    c.k = j.at("k").get<int>();
    c.use_property_set = j.at("property_set").get<bool>();
    c.use_type_set = j.at("type_set").get<bool>();
    c.use_incoming_property_set = j.at("incoming_property_set").get<bool>();
    c.neighbor_mode = neighbor_mode_from_string(j.at("neighbor").get<std::string>());
    c.or_combination = j.at("or_combination").get<bool>();
    c.related_properties = j.at("related_properties").get<bool>();
    c.rdfs_mode = inference_mode_from_string(j.at("rdfs").get<std::string>());
    c.same_as = j.at("same_as").get<bool>();
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed model config: ") + e.what());
  }
}

}  // namespace fluid
