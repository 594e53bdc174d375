#include "fluid/evaluation.hpp"

#include <algorithm>
#include <cstdio>

#include "fluid/errors.hpp"

namespace fluid {

Prf f1_score(const StringSet& gold, const StringSet& window) {
  if (gold.empty()) throw EmptyGold("gold answer is empty");
  std::size_t overlap = 0;
  for (const auto& s : window) overlap += gold.count(s);
  Prf r;
  r.precision = window.empty() ? 0.0
                               : static_cast<double>(overlap) / static_cast<double>(window.size());
  r.recall = static_cast<double>(overlap) / static_cast<double>(gold.size());
  const double sum = r.precision + r.recall;
  r.f1 = sum == 0.0 ? 0.0 : 2.0 * r.precision * r.recall / sum;
  return r;
}

F1Report evaluate(const Index& gold, const Index& approx, std::span<const Query> queries) {
  if (!compatible(gold.meta().config, approx.meta().config)) {
    throw IncompatibleModel("gold model '" + gold.meta().config.name + "' and approximate model '" +
                            approx.meta().config.name + "' differ");
  }
  const Searcher gold_searcher(gold);
  const Searcher approx_searcher(approx);
  F1Report report;
  report.config = approx.meta().config;
  report.window_capacity = approx.meta().window_capacity;
  for (const auto& q : queries) {
    const QueryResult g = gold_searcher.execute(q);
    const QueryResult w = approx_searcher.execute(q);
    QueryScore row;
    row.query_id = q.id;
    row.kind = q.kind;
    row.gold_size = g.sources.size();
    row.window_size = w.sources.size();
    for (const auto& s : w.sources) row.overlap += g.sources.count(s);
    KindSummary& k = report.summary[q.kind];
    ++k.queries;
    if (g.sources.empty()) ++k.empty_gold;
    if (w.sources.empty()) ++k.empty_window;
    try {
      row.score = f1_score(g.sources, w.sources);
      ++k.scored;
      k.macro_precision += row.score->precision;
      k.macro_recall += row.score->recall;
      k.macro_f1 += row.score->f1;
    } catch (const EmptyGold&) {
    }
    report.rows.push_back(row);
  }
  for (auto& [kind, k] : report.summary) {
    if (k.scored == 0) continue;
    const auto n = static_cast<double>(k.scored);
    k.macro_precision /= n;
    k.macro_recall /= n;
    k.macro_f1 /= n;
  }
  return report;
}

nlohmann::json to_json(const F1Report& report) {
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [kind, k] : report.summary) {
    summary[std::string(to_string(kind))] = {
        {"queries", k.queries},           {"scored", k.scored},
        {"empty_gold", k.empty_gold},     {"empty_window", k.empty_window},
        {"macro_precision", k.macro_precision}, {"macro_recall", k.macro_recall},
        {"macro_f1", k.macro_f1}};
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    nlohmann::json row = {{"id", r.query_id},
                          {"kind", std::string(to_string(r.kind))},
                          {"gold", r.gold_size},
                          {"window", r.window_size},
                          {"overlap", r.overlap}};
    if (r.score) {
      row["precision"] = r.score->precision;
      row["recall"] = r.score->recall;
      row["f1"] = r.score->f1;
    } else {
      row["precision"] = row["recall"] = row["f1"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json window = report.window_capacity ? nlohmann::json(*report.window_capacity)
                                                 : nlohmann::json("unbounded");
  return {{"model", report.config.name},
          {"k", report.config.k},
          {"window", window},
          {"f1", summary},
          {"queries", rows}};
}

std::string to_table(const F1Report& report) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "model %s  k=%d  window %s\n", report.config.name.c_str(),
                report.config.k,
                report.window_capacity ? std::to_string(*report.window_capacity).c_str()
                                       : "unbounded");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-8s %8s %8s %10s %12s %10s %10s %10s\n", "kind", "queries",
                "scored", "emptyGold", "emptyWindow", "precision", "recall", "F1");
  out += buf;
  for (const auto& [kind, k] : report.summary) {
    std::snprintf(buf, sizeof buf, "%-8s %8zu %8zu %10zu %12zu %10.4f %10.4f %10.4f\n",
                  std::string(to_string(kind)).c_str(), k.queries, k.scored, k.empty_gold,
                  k.empty_window, k.macro_precision, k.macro_recall, k.macro_f1);
    out += buf;
  }
  return out;
}

}  // namespace fluid
