#include "fluid/query.hpp"

#include <istream>
#include <ostream>
#include <set>

#include "fluid/errors.hpp"
#include "fluid/random.hpp"

namespace fluid {

std::string_view to_string(QueryKind kind) {
  return kind == QueryKind::kSimple ? "simple" : "complex";
}

QueryKind query_kind_from_string(std::string_view text) {
  if (text == "simple" || text == "sq") return QueryKind::kSimple;
  if (text == "complex" || text == "cq") return QueryKind::kComplex;
  throw InvalidConfig("unknown query kind '" + std::string(text) + "'");
}

std::optional<std::vector<std::string>> simple_key(const ModelConfig& config,
                                                   const Description& description) {
  if (description.has(kTypes)) return description.types;
  if (config.neighbor_mode == NeighborMode::kObjectIdentity && description.has(kLinks)) {
    std::set<std::string> objects;
    for (const auto& [p, o] : description.links) objects.insert(o);
    return std::vector<std::string>(objects.begin(), objects.end());
  }
  return std::nullopt;
}

std::vector<Query> generate_queries(const Index& gold, QueryKind kind,
                                    std::size_t sample_size, std::uint64_t seed) {
  if (gold.element_count() == 0) throw EmptyIndex("gold index has no schema elements");
  std::vector<const Description*> population;
  population.reserve(gold.element_count());
  for (const auto& [id, payload] : gold.elements()) population.push_back(&payload.description);

  Rng rng(seed);
  std::vector<Query> queries;
  std::set<std::vector<std::string>> seen;
  for (std::size_t i : rng.sample(population.size(), sample_size)) {
    Query q;
    q.kind = kind;
    q.config = gold.meta().config;
    if (kind == QueryKind::kComplex) {
      q.description = *population[i];
    } else {
      auto key = simple_key(gold.meta().config, *population[i]);
      if (!key || key->empty() || !seen.insert(*key).second) continue;
      q.keys = std::move(*key);
    }
    q.id = queries.size();
    queries.push_back(std::move(q));
  }
  return queries;
}

Searcher::Searcher(const Index& index) : index_(index) {
  for (const auto& [id, payload] : index.elements()) {
    if (auto key = simple_key(index.meta().config, payload.description)) {
      simple_[*key].insert(payload.sources.begin(), payload.sources.end());
    }
  }
}

QueryResult Searcher::execute(const Query& query) const {
  if (!compatible(query.config, index_.meta().config)) {
    throw IncompatibleModel("query model '" + query.config.name + "' (k=" +
                            std::to_string(query.config.k) + ") does not match index model '" +
                            index_.meta().config.name + "' (k=" +
                            std::to_string(index_.meta().config.k) + ")");
  }
  QueryResult result;
  result.query_id = query.id;
  if (query.kind == QueryKind::kComplex) {
    Description d = query.description;
    d.canonicalize();
    if (const Payload* p = index_.find(d.id())) result.sources = p->sources;
  } else if (auto it = simple_.find(query.keys); it != simple_.end()) {
    result.sources = it->second;
  }
  return result;
}

QueryResult execute(const Index& index, const Query& query) {
  return Searcher(index).execute(query);
}

namespace {

nlohmann::json description_json(const Description& d) {
  nlohmann::json links = nlohmann::json::array();
  for (const auto& [p, o] : d.links) links.push_back({p, o});
  return {{"layout", d.layout}, {"types", d.types},         {"properties", d.properties},
          {"incoming", d.incoming}, {"links", links}, {"neighbors", d.neighbors}};
}

Description description_from_json(const nlohmann::json& j) {
  Description d;
  d.layout = j.at("layout").get<std::uint8_t>();
  d.types = j.at("types").get<std::vector<std::string>>();
  d.properties = j.at("properties").get<std::vector<std::string>>();
  d.incoming = j.at("incoming").get<std::vector<std::string>>();
  for (const auto& link : j.at("links")) {
    d.links.emplace_back(link.at(0).get<std::string>(), link.at(1).get<std::string>());
  }
  d.neighbors = j.at("neighbors").get<std::vector<std::string>>();
  d.canonicalize();
  return d;
}

template <typename T, typename Parse>
std::vector<T> read_lines(std::istream& in, Parse parse, const char* what) {
  std::vector<T> out;
  std::string line;
  std::uint64_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty()) continue;
    try {
      out.push_back(parse(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(std::string(what) + " line " + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const Query& q) {
  nlohmann::json j = {{"id", q.id},
                      {"kind", std::string(to_string(q.kind))},
                      {"model", to_json(q.config)},
                      {"k", q.config.k}};
  if (q.kind == QueryKind::kSimple) {
    j["body"] = q.keys;
  } else {
    j["body"] = description_json(q.description);
    j["element"] = q.description.id().hex();
  }
  return j;
}

Query query_from_json(const nlohmann::json& j) {
  Query q;
  q.id = j.at("id").get<std::uint64_t>();
  q.kind = query_kind_from_string(j.at("kind").get<std::string>());
  q.config = model_config_from_json(j.at("model"));
  if (q.kind == QueryKind::kSimple) {
    q.keys = j.at("body").get<std::vector<std::string>>();
    std::set<std::string> sorted(q.keys.begin(), q.keys.end());
    q.keys.assign(sorted.begin(), sorted.end());
    if (q.keys.empty()) throw FormatError("simple query " + std::to_string(q.id) + " is empty");
  } else {
    q.description = description_from_json(j.at("body"));
  }
  return q;
}

void write_queries(std::ostream& out, std::span<const Query> queries) {
  for (const auto& q : queries) out << to_json(q).dump() << '\n';
}

std::vector<Query> read_queries(std::istream& in) {
  return read_lines<Query>(in, query_from_json, "query file");
}

nlohmann::json to_json(const QueryResult& r) {
  return {{"id", r.query_id}, {"sources", r.sources}};
}

void write_results(std::ostream& out, std::span<const QueryResult> results) {
  for (const auto& r : results) out << to_json(r).dump() << '\n';
}

std::vector<QueryResult> read_results(std::istream& in) {
  return read_lines<QueryResult>(
      in,
      [](const nlohmann::json& j) {
        QueryResult r;
        r.query_id = j.at("id").get<std::uint64_t>();
        r.sources = j.at("sources").get<StringSet>();
        return r;
      },
      "result file");
}

}  // namespace fluid
