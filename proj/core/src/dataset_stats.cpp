#include "fluid/dataset_stats.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "fluid/vocab.hpp"

namespace fluid {

std::size_t StatsAccumulator::TripleHash::operator()(
    const TripleKey& k) const noexcept {
  std::uint64_t h = (static_cast<std::uint64_t>(k.s) << 32) ^ k.p;
  h ^= static_cast<std::uint64_t>(k.o) * 0x9E3779B97F4A7C15ULL;
  h ^= h >> 29;
  return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
}

std::uint32_t StatsAccumulator::intern(std::string key) {
  auto [it, inserted] =
      ids_.try_emplace(std::move(key), static_cast<std::uint32_t>(terms_.size()));
  if (inserted) terms_.emplace_back();
  return it->second;
}

StatsAccumulator::TermCounters& StatsAccumulator::counters(std::uint32_t id) {
  return terms_[id];
}

void StatsAccumulator::add(const Quad& q) {
  ++triple_count_;
  const std::uint32_t s = intern(q.subject.to_ntriples());
  const std::uint32_t p = intern(q.predicate.to_ntriples());
  const std::uint32_t o = intern(q.object.to_ntriples());
  const std::uint32_t ds = intern(q.context.to_ntriples());
  counters(s).is_subject = true;
  sources_.insert(ds);

  if (subject_sources_.insert((static_cast<std::uint64_t>(s) << 32) | ds).second) {
    ++counters(s).sources;
  }

  const bool is_type = q.predicate.value == vocab::kRdfType;
  if (is_type) {
    type_terms_.insert(o);
  } else {
    properties_.insert(p);
  }
  if (!triples_.insert(TripleKey{s, p, o}).second) return;
  if (is_type) {
    ++counters(s).types;
  } else {
    ++counters(s).outgoing;
  }
  if (!q.object.is_literal()) ++counters(o).incoming;
}

namespace {

struct SumOfSquares {
  std::uint64_t n = 0;
  long double sum = 0;
  long double sum_sq = 0;

  void add(std::uint64_t v) {
    ++n;
    sum += static_cast<long double>(v);
    sum_sq += static_cast<long double>(v) * static_cast<long double>(v);
  }

  Moments moments() const {
    if (n == 0) return {};
    const long double mean = sum / static_cast<long double>(n);
    long double var = sum_sq / static_cast<long double>(n) - mean * mean;
    if (var < 0) var = 0;
    return {static_cast<double>(mean), static_cast<double>(std::sqrt(var))};
  }
};

}  // namespace

DatasetStats StatsAccumulator::finish() const {
  DatasetStats stats;
  stats.triple_count = triple_count_;
  stats.data_source_count = sources_.size();
  stats.unique_properties = properties_.size();
  stats.unique_types = type_terms_.size();
  SumOfSquares out, in, types, sources;
  for (const TermCounters& c : terms_) {
    if (!c.is_subject) continue;
    ++stats.instance_count;
    out.add(c.outgoing);
    in.add(c.incoming);
    types.add(c.types);
    sources.add(c.sources);
  }
  stats.outgoing = out.moments();
  stats.incoming = in.moments();
  stats.types = types.moments();
  stats.data_sources = sources.moments();
  return stats;
}

DatasetStats compute_dataset_stats(std::span<const Quad> quads) {
  StatsAccumulator acc;
  for (const Quad& q : quads) acc.add(q);
  return acc.finish();
}

namespace {

nlohmann::json moments_json(const Moments& m) {
  return {{"mean", m.mean}, {"sd", m.stddev}};
}

Moments moments_from(const nlohmann::json& j) {
  return {j.at("mean").get<double>(), j.at("sd").get<double>()};
}

}  // namespace

nlohmann::json to_json(const DatasetStats& s) {
  return {{"triples", s.triple_count},
          {"instances", s.instance_count},
          {"data_sources", s.data_source_count},
          {"unique_properties", s.unique_properties},
          {"unique_types", s.unique_types},
          {"per_instance",
           {{"outgoing", moments_json(s.outgoing)},
            {"incoming", moments_json(s.incoming)},
            {"types", moments_json(s.types)},
            {"data_sources", moments_json(s.data_sources)}}}};
}

DatasetStats dataset_stats_from_json(const nlohmann::json& j) {
  DatasetStats s;
  s.triple_count = j.at("triples").get<std::uint64_t>();
  s.instance_count = j.at("instances").get<std::uint64_t>();
  s.data_source_count = j.at("data_sources").get<std::uint64_t>();
  s.unique_properties = j.at("unique_properties").get<std::uint64_t>();
  s.unique_types = j.at("unique_types").get<std::uint64_t>();
  const auto& per = j.at("per_instance");
  s.outgoing = moments_from(per.at("outgoing"));
  s.incoming = moments_from(per.at("incoming"));
  s.types = moments_from(per.at("types"));
  s.data_sources = moments_from(per.at("data_sources"));
  return s;
}

std::string to_text(const DatasetStats& s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  auto row = [&out](const char* key, auto value) {
    out << std::left << std::setw(22) << key << value << '\n';
  };
  auto moments = [&out](const char* key, const Moments& m) {
    out << std::left << std::setw(22) << key << m.mean << " (SD " << m.stddev
        << ")\n";
  };
  row("triples", s.triple_count);
  row("instances", s.instance_count);
  row("data sources", s.data_source_count);
  row("unique properties", s.unique_properties);
  row("unique types", s.unique_types);
  moments("outgoing / instance", s.outgoing);
  moments("incoming / instance", s.incoming);
  moments("types / instance", s.types);
  moments("sources / instance", s.data_sources);
  return out.str();
}

}  // namespace fluid
