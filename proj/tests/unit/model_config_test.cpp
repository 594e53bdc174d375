#include <gtest/gtest.h>

#include <sstream>

#include "fluid/errors.hpp"
#include "fluid/model_config.hpp"

namespace fluid {
namespace {

TEST(Preset, SchemexUsesTypesPropertiesAndNeighborSchema) {
  const ModelConfig c = preset("schemex", 1);
  EXPECT_TRUE(c.use_type_set);
  EXPECT_TRUE(c.use_property_set);
  EXPECT_EQ(c.neighbor_mode, NeighborMode::kNeighborSchema);
  EXPECT_FALSE(c.use_incoming_property_set);
  EXPECT_EQ(c.rdfs_mode, InferenceMode::kNone);
}

TEST(Preset, TermpickerAggregatesNeighborTypes) {
  const ModelConfig c = preset("termpicker", 1);
  EXPECT_EQ(c.neighbor_mode, NeighborMode::kAggregatedNeighborTypes);
  EXPECT_TRUE(c.use_type_set);
}

TEST(Preset, CharacteristicSetsReturnsConfigAtHeightZero) {
  const ModelConfig c = preset("characteristic-sets", 0);
  EXPECT_TRUE(c.use_property_set);
  EXPECT_TRUE(c.use_incoming_property_set);
  EXPECT_FALSE(c.height_applicable());
  EXPECT_THROW(c.require_applicable_height(), InapplicableHeight);
}

TEST(Preset, RemainingRows) {
  const ModelConfig semsets = preset("semsets", 1);
  EXPECT_EQ(semsets.neighbor_mode, NeighborMode::kObjectIdentity);
  EXPECT_FALSE(semsets.use_type_set);
  EXPECT_TRUE(semsets.height_applicable());
  EXPECT_TRUE(preset("semsets", 0).height_applicable());

  const ModelConfig wpc = preset("weak-property-clique", 1);
  EXPECT_TRUE(wpc.related_properties);
  EXPECT_TRUE(wpc.or_combination);
  EXPECT_TRUE(wpc.use_incoming_property_set);
  EXPECT_EQ(wpc.rdfs_mode, InferenceMode::kPreProcessed);
  EXPECT_FALSE(preset("weak-property-clique", 0).height_applicable());

  const ModelConfig ui = preset("schemex-u-i", 2);
  EXPECT_TRUE(ui.same_as);
  EXPECT_EQ(ui.rdfs_mode, InferenceMode::kPreProcessed);
  EXPECT_EQ(ui.neighbor_mode, NeighborMode::kNeighborSchema);
  EXPECT_EQ(ui.k, 2);
}

TEST(Preset, UnknownNameAndBadHeight) {
  EXPECT_THROW(preset("nope", 1), UnknownPreset);
  EXPECT_THROW(preset("schemex", 3), InvalidConfig);
  EXPECT_EQ(preset_names().size(), 6u);
}

TEST(ModelConfig, OrWithoutRelatedPropertiesIsInvalid) {
  ModelConfig c;
  c.or_combination = true;
  EXPECT_THROW(c.validate(), InvalidConfig);
}

TEST(ModelConfig, OverridesAndFile) {
  ModelConfig c = preset("schemex", 1);
  apply_override(c, "rdfs", "otf");
  apply_override(c, " same_as ", " true ");
  EXPECT_EQ(c.rdfs_mode, InferenceMode::kOnTheFly);
  EXPECT_TRUE(c.same_as);
  EXPECT_THROW(apply_override(c, "colour", "red"), InvalidConfig);
  EXPECT_THROW(apply_override(c, "type_set", "maybe"), InvalidConfig);

  std::istringstream file("# custom\npreset = termpicker\nk = 2\nincoming_property_set = yes\n");
  const ModelConfig f = load_model_config(file);
  EXPECT_EQ(f.name, "termpicker");
  EXPECT_EQ(f.k, 2);
  EXPECT_TRUE(f.use_incoming_property_set);

  std::istringstream bad("k 2\n");
  EXPECT_THROW(load_model_config(bad), InvalidConfig);
}

TEST(ModelConfig, CompatibilityIgnoresInferenceOnly) {
  ModelConfig a = preset("schemex", 1);
  ModelConfig b = a;
  b.rdfs_mode = InferenceMode::kOnTheFly;
  b.name = "other";
  EXPECT_TRUE(compatible(a, b));
  b.k = 2;
  EXPECT_FALSE(compatible(a, b));
  EXPECT_FALSE(compatible(preset("schemex", 1), preset("schemex-u-i", 1)));
}

TEST(ModelConfig, JsonRoundTrip) {
  for (const auto& name : preset_names()) {
    for (int k = 0; k <= 2; ++k) {
      const ModelConfig c = preset(name, k);
      EXPECT_EQ(model_config_from_json(to_json(c)), c);
    }
  }
  EXPECT_THROW(model_config_from_json(nlohmann::json{{"k", 1}}), FormatError);
}

}  // namespace
}  // namespace fluid
