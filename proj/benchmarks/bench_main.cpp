#include <benchmark/benchmark.h>

#include <sstream>
#include <string>
#include <vector>

#include "fluid/engine.hpp"
#include "fluid/nquads.hpp"
#include "fluid/synthetic.hpp"

namespace {

std::vector<fluid::Quad> corpus(std::uint64_t instances) {
  fluid::SyntheticOptions o;
  o.instances = instances;
  o.seed = 7;
  o.interleave = 20;
  return fluid::generate_synthetic(o);
}

void BM_ParseLine(benchmark::State& state) {
  std::vector<std::string> lines;
  for (const auto& q : corpus(2000)) lines.push_back(fluid::to_nquads(q));
  std::size_t i = 0;
  const fluid::ParseOptions options;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fluid::parse_line(lines[i], i + 1, options));
    i = (i + 1) % lines.size();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_ParseLine);

void BM_Build(benchmark::State& state, const char* model, int k) {
  const auto quads = corpus(static_cast<std::uint64_t>(state.range(0)));
  fluid::RunPlan plan;
  plan.config = fluid::preset(model, k);
  plan.window_capacity = static_cast<std::uint64_t>(state.range(1));
  plan.progress_every = 0;
  for (auto _ : state) {
    auto result = fluid::build_index(plan, quads);
    benchmark::DoNotOptimize(result.index.element_count());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * quads.size()));
}
BENCHMARK_CAPTURE(BM_Build, schemex_k1, "schemex", 1)->Args({5000, 100})->Args({5000, 5000});
BENCHMARK_CAPTURE(BM_Build, schemex_k2, "schemex", 2)->Args({5000, 1000});
BENCHMARK_CAPTURE(BM_Build, termpicker_k1, "termpicker", 1)->Args({5000, 1000});
BENCHMARK_CAPTURE(BM_Build, wpc_k1, "weak-property-clique", 1)->Args({5000, 1000});
BENCHMARK_CAPTURE(BM_Build, schemex_u_i_k1, "schemex-u-i", 1)->Args({5000, 1000});

}  // namespace
BENCHMARK_MAIN();
