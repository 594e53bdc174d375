#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fluid/index_io.hpp"
#include "fluid_cli/cli.hpp"
#include "test_support.hpp"

namespace fluid {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fluid_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  void corpus() {
    ASSERT_EQ(run({"gen-synthetic", "--instances", "300", "--seed", "5", "--out",
                   path("data.nq")}),
              cli::kOk)
        << err_.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run({}), cli::kUsage);
  EXPECT_EQ(run({"build", "--in", "x.nq"}), cli::kUsage);
  EXPECT_EQ(run({"build", "--model", "nope", "--in", "x", "--out", "y"}), cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kUsage);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  EXPECT_EQ(run({"build", "--model", "schemex", "--in", path("missing.nq"), "--out",
                 path("idx")}),
            cli::kDataError);
  corpus();
  EXPECT_EQ(run({"build", "--model", "characteristic-sets", "--k", "0", "--in",
                 path("data.nq"), "--out", path("idx")}),
            cli::kDataError);
  EXPECT_NE(err_.str().find("height 0"), std::string::npos);
}

TEST_F(CliTest, PipelineSelfEvaluationIsPerfect) {
  corpus();
  ASSERT_EQ(run({"build", "--model", "schemex", "--k", "1", "--in", path("data.nq"), "--out",
                 path("gold")}),
            cli::kOk)
      << err_.str();
  ASSERT_EQ(run({"build", "--model", "schemex", "--k", "1", "--window", "5000", "--in",
                 path("data.nq"), "--out", path("big")}),
            cli::kOk);
  ASSERT_EQ(run({"querygen", "--gold", path("gold"), "--kind", "complex", "--n", "50",
                 "--out", path("q.jsonl")}),
            cli::kOk);
  ASSERT_EQ(run({"query", "--index", path("big"), "--queries", path("q.jsonl"), "--out",
                 path("r.jsonl")}),
            cli::kOk);
  ASSERT_EQ(run({"eval", "--gold", path("gold"), "--approx", path("big"), "--queries",
                 path("q.jsonl"), "--report", path("report.json")}),
            cli::kOk);
  const auto report = read_json(path("report.json"));
  EXPECT_EQ(report.at("metrics").at("f1").at("complex").at("macro_f1"), 1.0);
  EXPECT_EQ(report.at("run").at("command"), "eval");
  EXPECT_TRUE(fs::exists(path("q.jsonl.meta.json")));
  EXPECT_EQ(slurp(fs::path(path("gold")) / kIndexFile), slurp(fs::path(path("big")) / kIndexFile));
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  corpus();
  const std::string first = slurp(path("data.nq"));
  corpus();
  EXPECT_EQ(slurp(path("data.nq")), first);
  std::map<std::string, std::string> previous;
  for (int i = 0; i < 2; ++i) {
    ASSERT_EQ(run({"build", "--model", "schemex-u-i", "--k", "2", "--window", "20", "--in",
                   path("data.nq"), "--out", path("w")}),
              cli::kOk)
        << err_.str();
    for (const char* f : {kIndexFile, kMetadataFile}) {
      const std::string now = slurp(fs::path(path("w")) / f);
      if (i == 1) {
        EXPECT_EQ(now, previous[f]) << f;
      }
      previous[f] = now;
    }
  }
}

TEST_F(CliTest, StatsAndCorrelate) {
  ASSERT_EQ(run({"stats", "--in", testing::data_path("books.nq").string(), "--json"}), cli::kOk);
  const auto stats = nlohmann::json::parse(out_.str());
  EXPECT_EQ(stats.at("triples"), 6);
  EXPECT_EQ(stats.at("instances"), 4);

  for (int i = 0; i < 4; ++i) {
    write_json(path("r" + std::to_string(i) + ".json"),
               {{"a", {{"x", i}}}, {"b", {{"y", i * i + (i == 2 ? 1 : 0)}}}});
  }
  ASSERT_EQ(run({"correlate", "--reports", dir_.string(), "--x", "a.x", "--y", "b.y"}),
            cli::kOk)
      << err_.str();
  EXPECT_NE(out_.str().find("pearson"), std::string::npos);
}

}  // namespace
}  // namespace fluid
