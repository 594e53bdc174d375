#include <gtest/gtest.h>

#include <filesystem>

#include "fluid/errors.hpp"
#include "fluid/index.hpp"
#include "fluid/index_io.hpp"
#include "test_support.hpp"

namespace fluid {
namespace {

SchemaElement typed(std::string type) {
  Description d;
  d.layout = kTypes;
  d.types = {std::move(type)};
  return SchemaElement::from(d);
}

SchemaElement clique_element(StringSet out, StringSet in) {
  Description d;
  d.layout = kCliques;
  d.properties.assign(out.begin(), out.end());
  d.incoming.assign(in.begin(), in.end());
  return SchemaElement::from(d);
}

TEST(Index, RecordingUnionsSourcesAndCountsInstances) {
  Index index;
  index.record(typed("<A>"), {"http://ds1"});
  index.record(typed("<A>"), {"http://ds2"});
  index.record(typed("<B>"), {"http://ds1"});
  index.finalize();
  ASSERT_EQ(index.element_count(), 2u);
  const Payload* a = index.find(typed("<A>").id);
  ASSERT_NE(a, nullptr);
  EXPECT_EQ(a->sources, (StringSet{"http://ds1", "http://ds2"}));
  EXPECT_EQ(a->instance_count, 2u);
}

TEST(Index, EmptySourcesRejected) {
  Index index;
  EXPECT_THROW(index.record(typed("<A>"), {}), EmptySources);
}

TEST(Index, MetricsAreRatios) {
  Index index;
  index.record(typed("<A>"), {"http://ds1", "http://ds2"});
  index.finalize();
  EXPECT_EQ(count_rdf_triples(index), 4u);
  DatasetStats stats;
  stats.triple_count = 100;
  stats.instance_count = 500;
  const IndexMetrics m = compute_metrics(index, stats);
  EXPECT_DOUBLE_EQ(m.compression_ratio, 0.04);

  Index five;
  for (const char* t : {"<A>", "<B>", "<C>", "<D>", "<E>"}) five.record(typed(t), {"http://ds"});
  five.finalize();
  EXPECT_DOUBLE_EQ(compute_metrics(five, stats).summarization_ratio, 0.01);
  EXPECT_THROW(compute_metrics(five, DatasetStats{}), DivisionByZero);
}

TEST(Index, SerializationIsSortedAndComplete) {
  Index index;
  index.record(typed("<A>"), {"http://ds1"});
  index.finalize();
  const auto lines = serialize_rdf(index);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  const std::string e = typed("<A>").id.key();
  EXPECT_NE(std::find(lines.begin(), lines.end(), e + " <urn:fluid:hasType> <A> ."), lines.end());
  EXPECT_NE(std::find(lines.begin(), lines.end(), e + " <urn:fluid:foundIn> <http://ds1> ."),
            lines.end());
}

TEST(Index, RdfRoundTripAndTamperDetection) {
  const auto quads = testing::read_quads(testing::data_path("books.nq"));
  for (const auto& name : preset_names()) {
    const ModelConfig config = preset(name, 2);
    BuildResult built = build_index(testing::gold_plan(config), quads);
    std::map<ElementId, std::uint64_t> counts;
    for (const auto& [id, p] : built.index.elements()) counts[id] = p.instance_count;
    const auto lines = serialize_rdf(built.index);
    const Index back = parse_rdf(lines, built.index.meta(), counts);
    EXPECT_EQ(back, built.index) << name;
    EXPECT_EQ(serialize_rdf(back), lines) << name;
  }
  BuildResult built = build_index(testing::gold_plan(preset("schemex", 1)), quads);
  auto lines = serialize_rdf(built.index);
  for (auto& l : lines) {
    auto pos = l.find("<urn:fluid:hasType> ");
    if (pos != std::string::npos) {
      l.replace(pos, std::string::npos, "<urn:fluid:hasType> <http://tampered> .");
      break;
    }
  }
  EXPECT_THROW(parse_rdf(lines, built.index.meta()), FormatError);
  std::vector<std::string> garbage{"not a triple"};
  EXPECT_THROW(parse_rdf(garbage, built.index.meta()), FormatError);
}

TEST(Index, DirectoryRoundTrip) {
  const auto quads = testing::read_quads(testing::data_path("books.nq"));
  BuildResult built = build_index(testing::gold_plan(preset("termpicker", 1)), quads);
  const auto dir = std::filesystem::temp_directory_path() / "fluid_index_test";
  std::filesystem::remove_all(dir);
  RunRecord run;
  run.command = "test";
  write_index(dir, built.index, built.stats, run);
  const LoadedIndex loaded = read_index(dir);
  EXPECT_EQ(loaded.index, built.index);
  EXPECT_EQ(loaded.stats, built.stats);
  EXPECT_EQ(loaded.index.meta(), built.index.meta());
  EXPECT_EQ(loaded.metadata.at("format"), "fluid-index/1");
  std::filesystem::remove_all(dir);
}

TEST(Index, CliqueElementsMergeThroughSharedClique) {
  PropertyCliques cliques;
  cliques.update({"c1"}, {"c2"});
  cliques.update({"c1"}, {"c3"});
  cliques.update({"c9"}, {});
  Index index;
  const SchemaElement a = clique_element({"c1"}, {"c2"});
  const SchemaElement b = clique_element({"c1"}, {"c3"});
  const SchemaElement c = clique_element({"c9"}, {});
  index.record(a, {"http://ds1"});
  index.record(b, {"http://ds2"});
  index.record(c, {"http://ds3"});
  EXPECT_THROW(Index(index).finalize(), MissingCliques);
  index.finalize(&cliques);
  ASSERT_EQ(index.element_count(), 2u);
  EXPECT_EQ(index.resolve(a.id), index.resolve(b.id));
  EXPECT_NE(index.resolve(a.id), index.resolve(c.id));
  const Payload* merged = index.find(index.resolve(a.id));
  ASSERT_NE(merged, nullptr);
  EXPECT_EQ(merged->sources, (StringSet{"http://ds1", "http://ds2"}));
  EXPECT_EQ(merged->instance_count, 2u);
  EXPECT_EQ(merged->description.incoming, (std::vector<std::string>{"c2", "c3"}));
}

}  // namespace
}  // namespace fluid
