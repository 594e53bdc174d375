#include "fluid_cli/cli.hpp"

#include <glob.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fluid/correlation.hpp"
#include "fluid/dataset_stats.hpp"
#include "fluid/engine.hpp"
#include "fluid/errors.hpp"
#include "fluid/evaluation.hpp"
#include "fluid/index_io.hpp"
#include "fluid/log.hpp"
#include "fluid/model_config.hpp"
#include "fluid/query.hpp"
#include "fluid/run_record.hpp"
#include "fluid/synthetic.hpp"

namespace fluid::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kSchemaSnapshotFile = "schema-graph.tsv";
constexpr std::size_t kMaxParseWarnings = 20;

struct BuildArgs {
  std::string model;
  int k = 1;
  std::string window = "unbounded";
  std::string unit = "instances";
  std::string inference;
  std::vector<std::string> in;
  std::string out;
  std::string config;
  std::vector<std::string> set;
  std::string default_source = std::string(vocab::kDefaultSource);
  std::string schema_graph;
  std::string dataset;
};

struct StatsArgs {
  std::vector<std::string> in;
  std::string default_source = std::string(vocab::kDefaultSource);
  bool json = false;
  std::string out;
};

struct QuerygenArgs {
  std::string gold;
  std::string kind;
  std::size_t n = kDefaultSampleSize;
  std::uint64_t seed = 1;
  std::string out;
};

struct QueryArgs {
  std::string index;
  std::string queries;
  std::string out;
};

struct EvalArgs {
  std::string gold;
  std::string approx;
  std::string queries;
  std::string report;
};

struct CorrelateArgs {
  std::string reports;
  std::string x;
  std::string y;
  std::string out;
};

struct SyntheticArgs {
  SyntheticOptions options;
  std::string rdfs_position = "first";
  std::string out;
};

std::map<std::string, std::string> flags_of(const CLI::App& command) {
  std::map<std::string, std::string> flags;
  for (const CLI::Option* opt : command.get_options()) {
    const std::string name = opt->get_name();
    if (name.find("help") != std::string::npos) continue;
    std::string value;
    for (const auto& r : opt->results()) value += (value.empty() ? "" : ",") + r;
    if (opt->results().empty()) value = opt->get_default_str();
    flags[name] = value;
  }
  return flags;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StreamAborted("cannot write " + path.string());
  out << text;
  if (!out) throw StreamAborted("write failed: " + path.string());
}

fs::path meta_path(const fs::path& output) { return fs::path(output.string() + ".meta.json"); }

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StreamAborted("cannot open " + path.string());
  return in;
}

FileSource::ErrorHandler parse_warning_handler(std::uint64_t& count) {
  return [&count](const fs::path& path, const ParseError& e) {
    if (++count <= kMaxParseWarnings) {
      logger()->warn("{}:{}: {}", path.string(), e.line, e.reason);
    } else if (count == kMaxParseWarnings + 1) {
      logger()->warn("further parse errors are counted but not shown");
    }
  };
}

nlohmann::json counters_json(const ReaderCounters& c) {
  return {{"lines", c.lines}, {"quads", c.quads}, {"errors", c.errors}, {"skipped", c.skipped}};
}

int do_build(const BuildArgs& a, const CLI::App& command, std::ostream& out) {
  ModelConfig config;
  if (!a.config.empty()) {
    std::ifstream in = open_input(a.config);
    config = load_model_config(in);
  } else {
    config = preset(a.model, a.k);
  }
  if (command.count("--k") > 0) config.k = a.k;
  if (!a.inference.empty()) config.rdfs_mode = inference_mode_from_string(a.inference);
  for (const auto& kv : a.set) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidConfig("--set expects key=value, got '" + kv + "'");
    apply_override(config, kv.substr(0, eq), kv.substr(eq + 1));
  }
  config.validate();
  config.require_applicable_height();

  RunPlan plan;
  plan.config = config;
  if (a.window != "unbounded") {
    try {
      std::size_t used = 0;
      plan.window_capacity = std::stoull(a.window, &used);
      if (used != a.window.size()) throw std::invalid_argument(a.window);
    } catch (const std::logic_error&) {
      throw InvalidConfig("--window expects a count or 'unbounded', got '" + a.window + "'");
    }
  }
  plan.window_unit = a.unit == "triples" ? WindowUnit::kTriples : WindowUnit::kInstances;
  plan.dataset = a.dataset.empty() ? fs::path(a.in.front()).filename().string() : a.dataset;

  RunRecord run;
  run.command = "build";
  run.flags = flags_of(command);
  for (const auto& p : a.in) run.add_input(p);
  if (!a.config.empty()) run.add_input(a.config);
  if (!a.schema_graph.empty()) {
    run.add_input(a.schema_graph);
    std::ifstream in = open_input(a.schema_graph);
    plan.schema = SchemaGraph::read_snapshot(in);
  }

  std::uint64_t warnings = 0;
  FileSource source(std::vector<fs::path>(a.in.begin(), a.in.end()), a.default_source,
                    parse_warning_handler(warnings));
  BuildResult result = build_index(plan, source);

  const fs::path dir = a.out;
  nlohmann::json extra = {{"parse", counters_json(source.counters())},
                          {"engine",
                           {{"quads", result.quads},
                            {"summarized", result.summarized},
                            {"evicted", result.evicted},
                            {"peak_window", result.peak_window}}}};
  write_index(dir, result.index, result.stats, run, extra);
  if (config.rdfs_mode == InferenceMode::kPreProcessed) {
    std::ostringstream snapshot;
    result.schema.write_snapshot(snapshot);
    write_text(dir / kSchemaSnapshotFile, snapshot.str());
  }
  out << "wrote " << result.index.element_count() << " schema elements for "
      << result.stats.instance_count << " instances to " << dir.string() << '\n';
  return kOk;
}

int do_stats(const StatsArgs& a, const CLI::App& command, std::ostream& out) {
  std::uint64_t warnings = 0;
  FileSource source(std::vector<fs::path>(a.in.begin(), a.in.end()), a.default_source,
                    parse_warning_handler(warnings));
  StatsAccumulator acc;
  source.replay([&acc](const Quad& q) { acc.add(q); });
  const DatasetStats stats = acc.finish();
  nlohmann::json doc = to_json(stats);
  doc["parse"] = counters_json(source.counters());
  const std::string text = a.json ? doc.dump(2) + "\n" : to_text(stats);
  if (a.out.empty()) {
    out << text;
    return kOk;
  }
  RunRecord run;
  run.command = "stats";
  run.flags = flags_of(command);
  for (const auto& p : a.in) run.add_input(p);
  write_text(a.out, text);
  write_json(meta_path(a.out), to_json(run));
  return kOk;
}

int do_querygen(const QuerygenArgs& a, const CLI::App& command, std::ostream& out) {
  const LoadedIndex gold = read_index(a.gold);
  const std::vector<Query> queries =
      generate_queries(gold.index, query_kind_from_string(a.kind), a.n, a.seed);
  std::ostringstream text;
  write_queries(text, queries);
  RunRecord run;
  run.command = "querygen";
  run.flags = flags_of(command);
  run.add_input(fs::path(a.gold) / kIndexFile);
  run.add_input(fs::path(a.gold) / kMetadataFile);
  write_text(a.out, text.str());
  write_json(meta_path(a.out), to_json(run));
  out << "wrote " << queries.size() << ' ' << a.kind << " queries to " << a.out << '\n';
  return kOk;
}

int do_query(const QueryArgs& a, const CLI::App& command, std::ostream& out) {
  const LoadedIndex loaded = read_index(a.index);
  std::ifstream in = open_input(a.queries);
  const std::vector<Query> queries = read_queries(in);
  const Searcher searcher(loaded.index);
  std::vector<QueryResult> results;
  results.reserve(queries.size());
  for (const auto& q : queries) results.push_back(searcher.execute(q));
  std::ostringstream text;
  write_results(text, results);
  RunRecord run;
  run.command = "query";
  run.flags = flags_of(command);
  run.add_input(fs::path(a.index) / kIndexFile);
  run.add_input(a.queries);
  write_text(a.out, text.str());
  write_json(meta_path(a.out), to_json(run));
  out << "answered " << results.size() << " queries into " << a.out << '\n';
  return kOk;
}

nlohmann::json metrics_or_null(const LoadedIndex& x) {
  if (x.stats.triple_count == 0 || x.stats.instance_count == 0) return nullptr;
  return to_json(compute_metrics(x.index, x.stats));
}

int do_eval(const EvalArgs& a, const CLI::App& command, std::ostream& out) {
  const LoadedIndex gold = read_index(a.gold);
  const LoadedIndex approx = read_index(a.approx);
  std::ifstream in = open_input(a.queries);
  const std::vector<Query> queries = read_queries(in);
  const F1Report report = evaluate(gold.index, approx.index, queries);
  const nlohmann::json body = to_json(report);

  RunRecord run;
  run.command = "eval";
  run.flags = flags_of(command);
  run.add_input(fs::path(a.gold) / kIndexFile);
  run.add_input(fs::path(a.approx) / kIndexFile);
  run.add_input(a.queries);

  nlohmann::json doc = {
      {"run", to_json(run)},
      {"model", to_json(report.config)},
      {"window", body.at("window")},
      {"dataset", approx.index.meta().dataset},
      {"metrics",
       {{"f1", body.at("f1")},
        {"gold", metrics_or_null(gold)},
        {"approx", metrics_or_null(approx)},
        {"dataset", to_json(approx.stats)}}},
      {"queries", body.at("queries")},
  };
  write_json(a.report, doc);
  out << to_table(report);
  return kOk;
}

std::vector<fs::path> report_files(const std::string& pattern) {
  std::vector<fs::path> files;
  if (fs::is_directory(pattern)) {
    for (const auto& entry : fs::directory_iterator(pattern)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.ends_with(".json") && !name.ends_with(".meta.json")) {
        files.push_back(entry.path());
      }
    }
  } else {
    glob_t g{};
    if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
      for (std::size_t i = 0; i < g.gl_pathc; ++i) {
        const std::string name = g.gl_pathv[i];
        if (!name.ends_with(".meta.json")) files.emplace_back(name);
      }
    }
    globfree(&g);
  }
  std::sort(files.begin(), files.end());
  return files;
}

double metric_at(const nlohmann::json& doc, const std::string& dotted, const fs::path& file) {
  std::string pointer = "/" + dotted;
  std::replace(pointer.begin(), pointer.end(), '.', '/');
  const nlohmann::json::json_pointer ptr(pointer);
  if (!doc.contains(ptr) || !doc.at(ptr).is_number()) {
    throw FormatError(file.string() + ": no numeric metric '" + dotted + "'");
  }
  return doc.at(ptr).get<double>();
}

int do_correlate(const CorrelateArgs& a, const CLI::App& command, std::ostream& out) {
  const std::vector<fs::path> files = report_files(a.reports);
  if (files.empty()) throw FormatError("no reports match '" + a.reports + "'");
  std::vector<double> xs;
  std::vector<double> ys;
  RunRecord run;
  run.command = "correlate";
  run.flags = flags_of(command);
  for (const auto& f : files) {
    const nlohmann::json doc = read_json(f);
    xs.push_back(metric_at(doc, a.x, f));
    ys.push_back(metric_at(doc, a.y, f));
    run.add_input(f);
  }
  nlohmann::json doc = to_json(correlate(xs, ys));
  doc["x"] = a.x;
  doc["y"] = a.y;
  if (a.out.empty()) {
    out << doc.dump(2) << '\n';
    return kOk;
  }
  doc["run"] = to_json(run);
  write_json(a.out, doc);
  write_json(meta_path(a.out), to_json(run));
  out << doc.dump(2) << '\n';
  return kOk;
}

int do_synthetic(SyntheticArgs a, const CLI::App& command, std::ostream& out) {
  a.options.rdfs_position = rdfs_position_from_string(a.rdfs_position);
  const std::vector<Quad> quads = generate_synthetic(a.options);
  std::ostringstream text;
  write_nquads(text, quads);
  RunRecord run;
  run.command = "gen-synthetic";
  run.flags = flags_of(command);
  write_text(a.out, text.str());
  write_json(meta_path(a.out), to_json(run));
  out << "wrote " << quads.size() << " quads to " << a.out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming schema-level index builder and evaluator", "fluid"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(library_version()));

  std::vector<std::string> presets(preset_names().begin(), preset_names().end());

  BuildArgs build;
  CLI::App* b = app.add_subcommand("build", "Build a schema-level index from N-Quads");
  b->add_option("--model", build.model, "Model preset")->check(CLI::IsMember(presets));
  b->add_option("--k", build.k, "Neighbor height")->check(CLI::Range(0, 2))->capture_default_str();
  b->add_option("--window", build.window, "Window capacity or 'unbounded'")->capture_default_str();
  b->add_option("--window-unit", build.unit, "What the window capacity counts")
      ->check(CLI::IsMember({"instances", "triples"}))
      ->capture_default_str();
  b->add_option("--inference", build.inference, "RDFS inference: none, otf or pre")
      ->check(CLI::IsMember({"none", "otf", "pre"}));
  b->add_option("--in", build.in, "Input N-Quads files (.gz allowed)")->required()->expected(1, -1);
  b->add_option("--out", build.out, "Output index directory")->required();
  auto* config_opt = b->add_option("--config", build.config, "Model configuration file");
  b->add_option("--set", build.set, "Model override key=value (repeatable)");
  b->add_option("--default-source", build.default_source, "Source for triples without a graph")
      ->capture_default_str();
  b->add_option("--schema-graph", build.schema_graph, "Schema-graph snapshot for --inference pre");
  b->add_option("--dataset", build.dataset, "Dataset label recorded in the metadata");
  b->get_option("--model")->excludes(config_opt);

  StatsArgs stats;
  CLI::App* s = app.add_subcommand("stats", "Print dataset statistics");
  s->add_option("--in", stats.in, "Input N-Quads files")->required()->expected(1, -1);
  s->add_option("--default-source", stats.default_source, "Source for triples without a graph")
      ->capture_default_str();
  s->add_flag("--json", stats.json, "Machine-readable output");
  s->add_option("--out", stats.out, "Write to a file instead of stdout");

  QuerygenArgs querygen;
  CLI::App* g = app.add_subcommand("querygen", "Generate queries from a gold index");
  g->add_option("--gold", querygen.gold, "Gold index directory")->required();
  g->add_option("--kind", querygen.kind, "simple or complex")
      ->required()
      ->check(CLI::IsMember({"simple", "complex"}));
  g->add_option("--n", querygen.n, "Sample size")->capture_default_str();
  g->add_option("--seed", querygen.seed, "Sampling seed")->capture_default_str();
  g->add_option("--out", querygen.out, "Query file")->required();

  QueryArgs query;
  CLI::App* q = app.add_subcommand("query", "Execute queries against an index");
  q->add_option("--index", query.index, "Index directory")->required();
  q->add_option("--queries", query.queries, "Query file")->required();
  q->add_option("--out", query.out, "Result file")->required();

  EvalArgs eval;
  CLI::App* e = app.add_subcommand("eval", "Score an approximate index against gold");
  e->add_option("--gold", eval.gold, "Gold index directory")->required();
  e->add_option("--approx", eval.approx, "Approximate index directory")->required();
  e->add_option("--queries", eval.queries, "Query file")->required();
  e->add_option("--report", eval.report, "Report file (JSON)")->required();

  CorrelateArgs corr;
  CLI::App* c = app.add_subcommand("correlate", "Correlate a metric pair across reports");
  c->add_option("--reports", corr.reports, "Glob or directory of reports")->required();
  c->add_option("--x", corr.x, "Dotted metric path, e.g. metrics.approx.compression_ratio")
      ->required();
  c->add_option("--y", corr.y, "Dotted metric path, e.g. metrics.f1.complex.macro_f1")
      ->required();
  c->add_option("--out", corr.out, "Also write the report to this file");

  SyntheticArgs syn;
  SyntheticOptions& o = syn.options;
  CLI::App* y = app.add_subcommand("gen-synthetic", "Write a seeded random N-Quads corpus");
  y->add_option("--instances", o.instances, "Instances")->capture_default_str();
  y->add_option("--types", o.types, "Type vocabulary size")->capture_default_str();
  y->add_option("--properties", o.properties, "Property vocabulary size")->capture_default_str();
  y->add_option("--seed", o.seed, "Seed")->capture_default_str();
  y->add_option("--sources", o.sources, "Data sources")->capture_default_str();
  y->add_option("--out", syn.out, "Output file")->required();
  y->add_option("--profile-size", o.profile_size, "Properties per type profile")
      ->capture_default_str();
  y->add_option("--property-rate", o.property_rate, "Chance a profile property is used")
      ->capture_default_str();
  y->add_option("--extra-property-rate", o.extra_property_rate,
                "Chance of a property outside the profile")
      ->capture_default_str();
  y->add_option("--extra-type-rate", o.extra_type_rate, "Chance of a second type")
      ->capture_default_str();
  y->add_option("--untyped-rate", o.untyped_rate, "Share of untyped instances")
      ->capture_default_str();
  y->add_option("--link-rate", o.link_rate, "Chance an object is another instance")
      ->capture_default_str();
  y->add_option("--link-span", o.link_span, "Max distance to a link target (0: anywhere)")
      ->capture_default_str();
  y->add_option("--fan-out-rate", o.fan_out_rate, "Chance of each further value")
      ->capture_default_str();
  y->add_option("--blank-rate", o.blank_rate, "Share of blank-node subjects")
      ->capture_default_str();
  y->add_option("--extra-source-rate", o.extra_source_rate,
                "Chance a statement leaves its home source")
      ->capture_default_str();
  y->add_option("--same-as-rate", o.same_as_rate, "Share of instances with owl:sameAs")
      ->capture_default_str();
  y->add_option("--rdfs-rate", o.rdfs_rate, "Share of terms with an RDFS axiom")
      ->capture_default_str();
  y->add_option("--rdfs-position", syn.rdfs_position, "first, last or mixed")
      ->check(CLI::IsMember({"first", "last", "mixed"}))
      ->capture_default_str();
  y->add_option("--interleave", o.interleave, "Subject interleaving spread")
      ->capture_default_str();
  y->add_option("--namespace", o.ns, "IRI namespace")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (b->parsed() && build.model.empty() && build.config.empty()) {
      throw CLI::RequiredError("--model or --config");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << library_version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "fluid: " << ex.what() << "\n\n";
    const CLI::App* failed = &app;
    for (const CLI::App* sub : app.get_subcommands({})) {
      if (sub->parsed()) failed = sub;
    }
    err << failed->help();
    return kUsage;
  }

  try {
    if (b->parsed()) return do_build(build, *b, out);
    if (s->parsed()) return do_stats(stats, *s, out);
    if (g->parsed()) return do_querygen(querygen, *g, out);
    if (q->parsed()) return do_query(query, *q, out);
    if (e->parsed()) return do_eval(eval, *e, out);
    if (c->parsed()) return do_correlate(corr, *c, out);
    if (y->parsed()) return do_synthetic(syn, *y, out);
  } catch (const Error& ex) {
    err << "fluid: " << ex.what() << '\n';
    return kDataError;
  } catch (const fs::filesystem_error& ex) {
    err << "fluid: " << ex.what() << '\n';
    return kDataError;
  } catch (const nlohmann::json::exception& ex) {
    err << "fluid: " << ex.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace fluid::cli
