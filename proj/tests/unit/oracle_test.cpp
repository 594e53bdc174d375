#include <gtest/gtest.h>

#include "test_support.hpp"

namespace fluid {
namespace {

using testing::build_partitioned;
using testing::gold_plan;

oracle::Partition engine_partition(const ModelConfig& c, std::span<const Quad> quads) {
  return build_partitioned(gold_plan(c), quads).partition;
}

TEST(Oracle, BookCreatorsPartition) {
  const auto quads = testing::read_quads(testing::data_path("books.nq"));
  const oracle::Partition expected = {
      {"<http://example.org/s-1>", "<http://example.org/s-91>"},
      {"<http://example.org/o-1>", "<http://example.org/o-91>"}};
  EXPECT_EQ(oracle::partition(preset("schemex", 1), quads), expected);
  EXPECT_EQ(oracle::partition(preset("semsets", 1), quads).size(), 3u);
}

class OracleAgreement : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleAgreement, EveryModelAndHeight) {
  SyntheticOptions o = testing::small_corpus(GetParam(), 120);
  o.same_as_rate = 0.05;
  o.rdfs_rate = 0.2;
  o.blank_rate = 0.05;
  const auto quads = generate_synthetic(o);
  for (const auto& name : preset_names()) {
    for (int k = 0; k <= 2; ++k) {
      const ModelConfig c = preset(name, k);
      if (!c.height_applicable()) continue;
      EXPECT_EQ(engine_partition(c, quads), oracle::partition(c, quads))
          << name << " k=" << k;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OracleAgreement, ::testing::Values(1, 2, 3, 4, 5));

TEST(Oracle, SharedPropertyCollapsesCliques) {
  std::vector<Quad> quads;
  for (int i = 0; i < 30; ++i) {
    const std::string s = "<http://x/" + std::to_string(i) + ">";
    quads.push_back(testing::quad(s, "<http://shared>", "\"v\""));
    quads.push_back(testing::quad(s, "<http://p" + std::to_string(i % 7) + ">",
                                  "<http://x/" + std::to_string((i + 1) % 30) + ">"));
  }
  const ModelConfig c = preset("weak-property-clique", 1);
  const auto built = build_partitioned(gold_plan(c), quads);
  EXPECT_LE(built.result.index.element_count(), 2u);
  EXPECT_EQ(built.partition, oracle::partition(c, quads));
}

}  // namespace
}  // namespace fluid
