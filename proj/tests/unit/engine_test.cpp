#include <gtest/gtest.h>

#include <sstream>

#include "fluid/engine.hpp"
#include "fluid/errors.hpp"
#include "fluid/vocab.hpp"
#include "test_support.hpp"

namespace fluid {
namespace {

using testing::build_partitioned;
using testing::gold_plan;
using testing::quad;
using testing::window_plan;

const std::string kType = testing::kRdfTypeTerm;
const std::string kSubClassOf = "<http://www.w3.org/2000/01/rdf-schema#subClassOf>";

TEST(Engine, BooksShareOneElement) {
  const auto quads = testing::read_quads(testing::data_path("books.nq"));
  const BuildResult r = build_index(gold_plan(preset("schemex", 1)), quads);
  EXPECT_EQ(r.summarized, 4u);
  int books = 0;
  for (const auto& [id, p] : r.index.elements()) {
    if (p.sources == StringSet{"http://example.org/ds-4", "http://example.org/ds-7"}) {
      ++books;
      EXPECT_EQ(p.instance_count, 2u);
    }
  }
  EXPECT_EQ(books, 1);
  EXPECT_EQ(r.index.element_count(), 2u);
}

TEST(Engine, LargeWindowEqualsGold) {
  const auto corpus = generate_synthetic(testing::small_corpus(3));
  for (const auto& name : preset_names()) {
    for (int k = 0; k <= 2; ++k) {
      const ModelConfig c = preset(name, k);
      if (!c.height_applicable()) continue;
      const BuildResult gold = build_index(gold_plan(c), corpus);
      const BuildResult window = build_index(window_plan(c, 1'000'000), corpus);
      EXPECT_EQ(testing::serialize(gold.index), testing::serialize(window.index))
          << name << " k=" << k;
    }
  }
}

TEST(Engine, TinyWindowSplitsInstances) {
  const std::vector<Quad> quads = {
      quad("<http://s1>", kType, "<http://A>"),
      quad("<http://s2>", kType, "<http://B>"),
      quad("<http://s1>", "<http://p>", "\"v\""),
  };
  const BuildResult gold = build_index(gold_plan(preset("schemex", 1)), quads);
  const BuildResult tiny = build_index(window_plan(preset("schemex", 1), 1), quads);
  EXPECT_EQ(gold.summarized, 2u);
  EXPECT_EQ(gold.index.element_count(), 2u);
  EXPECT_EQ(tiny.summarized, 3u);
  EXPECT_EQ(tiny.evicted, 2u);
  EXPECT_EQ(tiny.index.element_count(), 3u);
  EXPECT_EQ(tiny.peak_window, 1u);
}

TEST(Engine, RejectsZeroCapacityAndInapplicableHeight) {
  const std::vector<Quad> quads = {quad("<http://s>", kType, "<http://A>")};
  EXPECT_THROW(build_index(window_plan(preset("schemex", 1), 0), quads), InvalidConfig);
  EXPECT_THROW(build_index(gold_plan(preset("characteristic-sets", 0)), quads),
               InapplicableHeight);
}

TEST(Engine, SameAsChainMergesIntoOneInstance) {
  const auto quads = testing::read_quads(testing::data_path("sameas_chain.nq"));
  ModelConfig with = preset("schemex", 1);
  with.same_as = true;
  std::vector<std::vector<std::string>> groups;
  std::vector<SchemaElement> elements;
  RunPlan plan = gold_plan(with);
  plan.observer = [&](const std::vector<std::string>& s, const SchemaElement& e) {
    groups.push_back(s);
    elements.push_back(e);
  };
  const BuildResult merged = build_index(plan, quads);
  ASSERT_EQ(groups.size(), 1u);
  EXPECT_EQ(groups[0], (std::vector<std::string>{"<http://example.org/a>",
                                                 "<http://example.org/b>",
                                                 "<http://example.org/c>"}));
  EXPECT_EQ(elements[0].description.types,
            (std::vector<std::string>{"<http://example.org/A>", "<http://example.org/B>",
                                      "<http://example.org/C>"}));
  StringSet properties;
  for (const auto& [p, o] : elements[0].description.links) properties.insert(p);
  EXPECT_TRUE(properties.count("http://example.org/p1"));
  EXPECT_TRUE(properties.count("http://example.org/p2"));
  EXPECT_TRUE(properties.count("http://example.org/p3"));
  ASSERT_EQ(merged.index.element_count(), 1u);
  EXPECT_EQ(merged.index.elements().begin()->second.sources,
            (StringSet{"http://example.org/ds1", "http://example.org/ds2",
                       "http://example.org/ds3"}));

  const BuildResult separate = build_index(gold_plan(preset("schemex", 1)), quads);
  EXPECT_EQ(separate.summarized, 3u);
  EXPECT_EQ(separate.index.element_count(), 3u);
}

std::vector<Quad> ordered_rdfs_corpus(bool schema_first) {
  std::vector<Quad> schema = {quad("<http://C1>", kSubClassOf, "<http://C2>")};
  std::vector<Quad> data = {quad("<http://x>", kType, "<http://C1>"),
                            quad("<http://x>", "<http://p>", "\"1\"")};
  std::vector<Quad> out = schema_first ? schema : data;
  const auto& rest = schema_first ? data : schema;
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

TEST(Engine, InferenceOrdering) {
  ModelConfig oi = preset("schemex", 1);
  oi.rdfs_mode = InferenceMode::kOnTheFly;
  ModelConfig pi = oi;
  pi.rdfs_mode = InferenceMode::kPreProcessed;

  const auto first = ordered_rdfs_corpus(true);
  EXPECT_EQ(testing::serialize(build_index(gold_plan(oi), first).index),
            testing::serialize(build_index(gold_plan(pi), first).index));

  const auto last = ordered_rdfs_corpus(false);
  const BuildResult oi_last = build_index(gold_plan(oi), last);
  const BuildResult pi_last = build_index(gold_plan(pi), last);
  EXPECT_NE(testing::serialize(oi_last.index), testing::serialize(pi_last.index));
  EXPECT_EQ(pi_last.schema.super_classes("<http://C1>"), StringSet{"<http://C2>"});
}

TEST(Engine, MaterializedTypesSummarizeIdentically) {
  ModelConfig pi = preset("schemex", 1);
  pi.rdfs_mode = InferenceMode::kPreProcessed;
  std::vector<SchemaElement> inferred;
  RunPlan plan = gold_plan(pi);
  plan.observer = [&](const std::vector<std::string>& s, const SchemaElement& e) {
    if (s.front() == "<http://x>") inferred.push_back(e);
  };
  build_index(plan, ordered_rdfs_corpus(false));
  const std::vector<Quad> explicit_types = {quad("<http://x>", kType, "<http://C1>"),
                                            quad("<http://x>", kType, "<http://C2>"),
                                            quad("<http://x>", "<http://p>", "\"1\"")};
  std::vector<SchemaElement> asserted;
  RunPlan plain = gold_plan(preset("schemex", 1));
  plain.observer = [&](const std::vector<std::string>&, const SchemaElement& e) {
    asserted.push_back(e);
  };
  build_index(plain, explicit_types);
  ASSERT_EQ(inferred.size(), 1u);
  ASSERT_EQ(asserted.size(), 1u);
  EXPECT_EQ(inferred[0].id, asserted[0].id);
}

TEST(Engine, SuppliedSchemaSnapshotReplacesFirstPass) {
  ModelConfig pi = preset("schemex", 1);
  pi.rdfs_mode = InferenceMode::kPreProcessed;
  const auto corpus = ordered_rdfs_corpus(false);
  const BuildResult two_pass = build_index(gold_plan(pi), corpus);
  std::stringstream snapshot;
  two_pass.schema.write_snapshot(snapshot);
  RunPlan plan = gold_plan(pi);
  plan.schema = SchemaGraph::read_snapshot(snapshot);
  EXPECT_EQ(testing::serialize(build_index(plan, corpus).index),
            testing::serialize(two_pass.index));
}

TEST(Engine, Deterministic) {
  const auto corpus = generate_synthetic(testing::small_corpus(11));
  for (const char* name : {"schemex-u-i", "weak-property-clique", "termpicker"}) {
    const auto a = build_index(window_plan(preset(name, 2), 20), corpus);
    const auto b = build_index(window_plan(preset(name, 2), 20), corpus);
    EXPECT_EQ(testing::serialize(a.index), testing::serialize(b.index)) << name;
  }
}

TEST(Engine, ObserverSeesEverySummarizedInstance) {
  const auto corpus = generate_synthetic(testing::small_corpus(5));
  const auto built = build_partitioned(window_plan(preset("schemex", 1), 10), corpus);
  std::size_t blocks = 0;
  for (const auto& b : built.partition) blocks += b.empty() ? 0 : 1;
  EXPECT_EQ(blocks, built.result.index.element_count());
}

TEST(Engine, TripleWindowBoundsResidentStatements) {
  const auto corpus = generate_synthetic(testing::small_corpus(8));
  RunPlan plan = window_plan(preset("schemex", 1), 40);
  plan.window_unit = WindowUnit::kTriples;
  const BuildResult r = build_index(plan, corpus);
  EXPECT_GT(r.evicted, 0u);
  EXPECT_GE(r.summarized, r.stats.instance_count);
}

TEST(FileSource, ScopesBlankNodesPerFileAndCountsErrors) {
  std::vector<std::pair<std::size_t, std::string>> errors;
  FileSource source({testing::data_path("malformed.nq")}, "http://default",
                    [&](const std::filesystem::path&, const ParseError& e) {
                      errors.emplace_back(e.line, e.reason);
                    });
  std::size_t n = 0;
  source.replay([&](const Quad&) { ++n; });
  source.replay([&](const Quad&) { ++n; });
  EXPECT_EQ(n, 6u);
  EXPECT_EQ(errors.size(), 2u);
}

}  // namespace
}  // namespace fluid
