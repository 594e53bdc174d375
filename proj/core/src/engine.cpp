#include "fluid/engine.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "fluid/errors.hpp"
#include "fluid/log.hpp"
#include "fluid/same_as.hpp"
#include "fluid/summarizer.hpp"

namespace fluid {

void MemorySource::replay(const QuadSink& sink) {
  for (const auto& q : quads_) sink(q);
}

FileSource::FileSource(std::vector<std::filesystem::path> paths, std::string default_source,
                       ErrorHandler on_error)
    : paths_(std::move(paths)),
      default_source_(std::move(default_source)),
      on_error_(std::move(on_error)) {}

void FileSource::replay(const QuadSink& sink) {
  counters_ = {};
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    ParseOptions options;
    options.default_source = default_source_;
    options.blank_prefix = paths_.size() > 1 ? "f" + std::to_string(i) + "_" : "";
    QuadReader reader(open_line_source(paths_[i]), options);
    while (auto statement = reader.next()) {
      if (const auto* q = std::get_if<Quad>(&*statement)) {
        sink(*q);
      } else if (!replayed_ && on_error_) {
        on_error_(paths_[i], std::get<ParseError>(*statement));
      }
    }
    const ReaderCounters& c = reader.counters();
    counters_.lines += c.lines;
    counters_.quads += c.quads;
    counters_.errors += c.errors;
    counters_.skipped += c.skipped;
  }
  replayed_ = true;
}

namespace {

class Engine;

// Resolves subjects against a batch of evicted instances plus the live
// window. Under owl:sameAs the members of a class found there are merged
// and their objects canonicalized; under pre-processed inference the result
// is enriched from the schema graph. Prepared instances are cached.
class PoolLookup final : public NeighborLookup {
 public:
  PoolLookup(const Engine& engine, const std::map<std::string, const DataInstance*>& pool)
      : engine_(engine), pool_(pool) {}

  const DataInstance* resolve(const std::string& object_key) const override {
    return prepare(object_key).instance;
  }

  std::vector<std::string> subjects(const std::string& key) const {
    return prepare(key).subjects;
  }

 private:
  struct Entry {
    const DataInstance* instance = nullptr;
    std::unique_ptr<DataInstance> owned;
    std::vector<std::string> subjects;
  };

  const Entry& prepare(const std::string& key) const;
  const DataInstance* raw(const std::string& key) const;

  const Engine& engine_;
  const std::map<std::string, const DataInstance*>& pool_;
  mutable std::unordered_map<std::string, Entry> cache_;
};

class Engine {
 public:
  explicit Engine(const RunPlan& plan)
      : plan_(plan),
        config_(plan.config),
        window_(WindowOptions{plan.window_capacity, plan.window_unit, needs_incoming(plan.config)}),
        index_(IndexMeta{plan.config, plan.dataset, plan.window_capacity, plan.window_unit}) {}

  BuildResult run(QuadSource& source) {
    config_.validate();
    config_.require_applicable_height();
    if (plan_.window_capacity && *plan_.window_capacity == 0) {
      throw InvalidConfig("window capacity must be at least 1");
    }
    if (config_.rdfs_mode == InferenceMode::kPreProcessed) {
      if (plan_.schema) {
        schema_ = *plan_.schema;
      } else {
        source.replay([this](const Quad& q) { ingest_schema_quad(schema_, q); });
      }
      schema_.freeze();
    }

    started_ = std::chrono::steady_clock::now();
    source.replay([this](const Quad& q) { absorb(q); });
    flush();
    index_.finalize(config_.related_properties ? &cliques_ : nullptr);

    BuildResult result;
    result.index = std::move(index_);
    result.stats = stats_.finish();
    result.schema = std::move(schema_);
    result.quads = quads_;
    result.summarized = summarized_;
    result.evicted = evicted_;
    result.peak_window = window_.peak_size();
    logger()->info("summarized {} instances into {} schema elements ({} quads, peak window {})",
                   summarized_, result.index.element_count(), quads_, result.peak_window);
    return result;
  }

  const InstanceWindow& window() const { return window_; }
  const SameAsPartition* same_as() const { return config_.same_as ? &same_as_ : nullptr; }
  const SchemaGraph* pre_schema() const {
    return config_.rdfs_mode == InferenceMode::kPreProcessed ? &schema_ : nullptr;
  }

 private:
  static bool needs_incoming(const ModelConfig& c) {
    return c.use_incoming_property_set || c.related_properties ||
           c.rdfs_mode != InferenceMode::kNone;
  }

  std::string canonical(const std::string& key) const {
    return config_.same_as ? same_as_.canonical(key) : key;
  }

  void absorb(const Quad& q) {
    stats_.add(q);
    ++quads_;
    const bool on_the_fly = config_.rdfs_mode == InferenceMode::kOnTheFly;
    if (on_the_fly) ingest_schema_quad(schema_, q);
    if (config_.same_as) same_as_.ingest(q);
    AbsorbResult r = window_.absorb(q);
    if (on_the_fly) {
      enrich_instance(schema_, *r.subject);
      if (r.object != nullptr) enrich_instance(schema_, *r.object);
    }
    for (auto& instance : r.evicted) evict(std::move(instance));
    if (plan_.progress_every != 0 && quads_ % plan_.progress_every == 0) report_progress();
  }

  void evict(DataInstance instance) {
    const std::string rep = canonical(instance.subject);
    std::vector<DataInstance> batch;
    batch.push_back(std::move(instance));
    if (config_.same_as) {
      for (const auto& member : same_as_.members(rep)) {
        if (member == batch.front().subject) continue;
        if (auto other = window_.remove(member)) batch.push_back(std::move(*other));
      }
    }
    evicted_ += batch.size();
    std::map<std::string, const DataInstance*> pool;
    for (const auto& b : batch) pool.emplace(b.subject, &b);
    PoolLookup lookup(*this, pool);
    summarize({rep}, lookup);
  }

  void flush() {
    std::vector<std::string> reps;
    std::unordered_set<std::string> seen;
    for (const auto& instance : window_.instances()) {
      std::string rep = canonical(instance.subject);
      if (seen.insert(rep).second) reps.push_back(std::move(rep));
    }
    const std::map<std::string, const DataInstance*> pool;
    PoolLookup lookup(*this, pool);
    summarize(reps, lookup);
    window_.drain();
  }

  void summarize(const std::vector<std::string>& reps, const PoolLookup& lookup) {
    std::vector<const DataInstance*> targets;
    targets.reserve(reps.size());
    for (const auto& rep : reps) targets.push_back(lookup.resolve(rep));
    if (config_.related_properties) {
      for (const DataInstance* t : targets) update_cliques(cliques_, config_, *t);
    }
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const SchemaElement element = schema_element(config_, *targets[i], lookup, &cliques_);
      index_.record(element, targets[i]->sources);
      ++summarized_;
      if (plan_.observer) plan_.observer(lookup.subjects(reps[i]), element);
    }
  }

  void report_progress() const {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    logger()->info("{} quads, {:.0f} quads/s, window {} instances / {} statements", quads_,
                   seconds > 0 ? static_cast<double>(quads_) / seconds : 0.0, window_.size(),
                   window_.resident_statements());
  }

  const RunPlan& plan_;
  ModelConfig config_;
  InstanceWindow window_;
  Index index_;
  SchemaGraph schema_;
  SameAsPartition same_as_;
  PropertyCliques cliques_;
  StatsAccumulator stats_;
  std::uint64_t quads_ = 0;
  std::uint64_t summarized_ = 0;
  std::uint64_t evicted_ = 0;
  std::chrono::steady_clock::time_point started_;
};

const DataInstance* PoolLookup::raw(const std::string& key) const {
  if (auto it = pool_.find(key); it != pool_.end()) return it->second;
  return engine_.window().find(key);
}

const PoolLookup::Entry& PoolLookup::prepare(const std::string& key) const {
  const SameAsPartition* same_as = engine_.same_as();
  const std::string rep = same_as != nullptr ? same_as->canonical(key) : key;
  if (auto it = cache_.find(rep); it != cache_.end()) return it->second;
  Entry& entry = cache_[rep];

  if (same_as == nullptr) {
    const DataInstance* found = raw(rep);
    if (found == nullptr) return entry;
    entry.subjects.push_back(rep);
    entry.instance = found;
  } else {
    std::vector<const DataInstance*> found;
    for (const auto& member : same_as->members(rep)) {
      if (const DataInstance* i = raw(member)) {
        found.push_back(i);
        entry.subjects.push_back(member);
      }
    }
    if (found.empty()) return entry;
    auto merged = std::make_unique<DataInstance>(*found.front());
    for (std::size_t i = 1; i < found.size(); ++i) merge_into(*merged, *found[i]);
    merged->subject = rep;
    auto canonical_edges = [same_as](const EdgeSet& edges) {
      EdgeSet out;
      for (const auto& [p, o] : edges) {
        out.emplace(p, key_is_literal(o) ? o : same_as->canonical(o));
      }
      return out;
    };
    merged->edges = canonical_edges(merged->edges);
    merged->inferred_edges = canonical_edges(merged->inferred_edges);
    entry.owned = std::move(merged);
  }

  if (const SchemaGraph* schema = engine_.pre_schema()) {
    if (!entry.owned) entry.owned = std::make_unique<DataInstance>(*entry.instance);
    enrich_instance(*schema, *entry.owned);
  }
  if (entry.owned) entry.instance = entry.owned.get();
  return entry;
}

}  // namespace

BuildResult build_index(const RunPlan& plan, QuadSource& source) {
  Engine engine(plan);
  return engine.run(source);
}

BuildResult build_index(const RunPlan& plan, std::span<const Quad> quads) {
  MemorySource source(quads);
  return build_index(plan, source);
}

}  // namespace fluid
