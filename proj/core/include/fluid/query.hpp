#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fluid/description.hpp"
#include "fluid/index.hpp"
#include "fluid/model_config.hpp"

namespace fluid {

enum class QueryKind { kSimple, kComplex };

std::string_view to_string(QueryKind kind);
QueryKind query_kind_from_string(std::string_view text);  // throws InvalidConfig

struct Query {
  std::uint64_t id = 0;
  QueryKind kind = QueryKind::kComplex;
  ModelConfig config;
  std::vector<std::string> keys;  // simple: sorted type keys (object keys for SemSets)
  Description description;        // complex

  friend bool operator==(const Query&, const Query&) = default;
};

struct QueryResult {
  std::uint64_t query_id = 0;
  StringSet sources;

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

inline constexpr std::size_t kDefaultSampleSize = 1000;

// Simple-query key of a description: its type set, or for object-identity
// models above height 0 the set of link objects. nullopt when the model
// has no simple-query projection.
std::optional<std::vector<std::string>> simple_key(const ModelConfig& config,
                                                   const Description& description);

// Seeded uniform sample of gold elements without replacement. Simple
// queries are the distinct nonempty projections of the sample.
// Throws EmptyIndex.
std::vector<Query> generate_queries(const Index& gold, QueryKind kind,
                                    std::size_t sample_size, std::uint64_t seed);

// Exact-match execution over one finalized index. Read-only.
class Searcher {
 public:
  explicit Searcher(const Index& index);

  // Throws IncompatibleModel.
  QueryResult execute(const Query& query) const;

 private:
  const Index& index_;
  std::map<std::vector<std::string>, StringSet> simple_;
};

QueryResult execute(const Index& index, const Query& query);

// Line-delimited JSON.
nlohmann::json to_json(const Query& query);
Query query_from_json(const nlohmann::json& j);
void write_queries(std::ostream& out, std::span<const Query> queries);
std::vector<Query> read_queries(std::istream& in);  // throws FormatError

nlohmann::json to_json(const QueryResult& result);
void write_results(std::ostream& out, std::span<const QueryResult> results);
std::vector<QueryResult> read_results(std::istream& in);

}  // namespace fluid
