#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fluid/index.hpp"
#include "fluid/query.hpp"

namespace fluid {

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  friend bool operator==(const Prf&, const Prf&) = default;
};

// Precision is 0 for an empty window answer. Throws EmptyGold.
Prf f1_score(const StringSet& gold, const StringSet& window);

struct QueryScore {
  std::uint64_t query_id = 0;
  QueryKind kind = QueryKind::kComplex;
  std::size_t gold_size = 0;
  std::size_t window_size = 0;
  std::size_t overlap = 0;
  std::optional<Prf> score;  // nullopt when the gold answer is empty
};

struct KindSummary {
  std::size_t queries = 0;
  std::size_t scored = 0;
  std::size_t empty_gold = 0;
  std::size_t empty_window = 0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
};

struct F1Report {
  ModelConfig config;
  std::optional<std::uint64_t> window_capacity;
  std::vector<QueryScore> rows;
  std::map<QueryKind, KindSummary> summary;
};

// Runs every query on both indices and macro-averages per query kind.
// Queries whose gold answer is empty are counted and left out of the
// averages. Throws IncompatibleModel.
F1Report evaluate(const Index& gold, const Index& approx, std::span<const Query> queries);

nlohmann::json to_json(const F1Report& report);
std::string to_table(const F1Report& report);

}  // namespace fluid
