#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fluid/dataset_stats.hpp"
#include "test_support.hpp"

namespace fluid {
namespace {

using testing::kRdfTypeTerm;
using testing::quad;

TEST(DatasetStats, EmptyInputIsAllZero) {
  const DatasetStats s = compute_dataset_stats({});
  EXPECT_EQ(s, DatasetStats{});
}

TEST(DatasetStats, CountsOnlySubjectsAsInstances) {
  const std::vector<Quad> quads = {quad("<http://a>", "<http://p1>", "<http://b>"),
                                   quad("<http://a>", "<http://p2>", "<http://c>")};
  const DatasetStats s = compute_dataset_stats(quads);
  EXPECT_EQ(s.instance_count, 1u);
  EXPECT_EQ(s.unique_properties, 2u);
  EXPECT_DOUBLE_EQ(s.outgoing.mean, 2.0);
  EXPECT_EQ(s.triple_count, 2u);
}

TEST(DatasetStats, DistinctContextsPerInstance) {
  const std::vector<Quad> quads = {
      quad("<http://a>", kRdfTypeTerm, "<http://C>", "http://ds1"),
      quad("<http://a>", kRdfTypeTerm, "<http://C>", "http://ds2")};
  const DatasetStats s = compute_dataset_stats(quads);
  EXPECT_DOUBLE_EQ(s.data_sources.mean, 2.0);
  EXPECT_EQ(s.unique_properties, 0u);
  EXPECT_EQ(s.unique_types, 1u);
  EXPECT_DOUBLE_EQ(s.types.mean, 1.0);
  EXPECT_EQ(s.triple_count, 2u);
  EXPECT_EQ(s.data_source_count, 2u);
}

TEST(DatasetStats, PopulationStandardDeviation) {
  const std::vector<Quad> quads = {quad("<http://a>", "<http://p>", "\"1\""),
                                   quad("<http://a>", "<http://p>", "\"2\""),
                                   quad("<http://a>", "<http://p>", "\"3\""),
                                   quad("<http://b>", "<http://p>", "\"1\"")};
  const DatasetStats s = compute_dataset_stats(quads);
  EXPECT_DOUBLE_EQ(s.outgoing.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.outgoing.stddev, 1.0);
}

TEST(DatasetStats, IncomingCountsSubjectPredicatePairs) {
  const std::vector<Quad> quads = {quad("<http://a>", "<http://p>", "<http://b>"),
                                   quad("<http://c>", "<http://p>", "<http://b>"),
                                   quad("<http://b>", "<http://q>", "\"x\"")};
  const DatasetStats s = compute_dataset_stats(quads);
  EXPECT_EQ(s.instance_count, 3u);
  EXPECT_NEAR(s.incoming.mean, 2.0 / 3.0, 1e-15);
}

TEST(DatasetStats, OrderInvariant) {
  auto quads = generate_synthetic(testing::small_corpus(4, 300));
  const DatasetStats expected = compute_dataset_stats(quads);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(quads.begin(), quads.end(), rng);
    EXPECT_EQ(compute_dataset_stats(quads), expected);
  }
}

TEST(DatasetStats, JsonRoundTrip) {
  const auto quads = generate_synthetic(testing::small_corpus(2));
  const DatasetStats s = compute_dataset_stats(quads);
  EXPECT_EQ(dataset_stats_from_json(to_json(s)), s);
  EXPECT_NE(to_text(s).find("instances"), std::string::npos);
}

}  // namespace
}  // namespace fluid
