#include <benchmark/benchmark.h>

#include <random>

#include "rp3/canon.hpp"
#include "rp3/families.hpp"
#include "rp3/linkage.hpp"
#include "rp3/minor.hpp"

namespace {

using namespace rp3;

const Graph& p9b_pair() {
  static const Graph g = therefore_family(default_family()).by_name("P9B∴P9B").graph;
  return g;
}

const Graph& k6_pair() {
  static const Graph g = [] {
    const MarkedGraph m = k6_therefore();
    return glue_therefore(m, m, {0, 1, 2});
  }();
  return g;
}

void BM_CanonicalPetersen(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalPetersen);

void BM_CanonicalP9BPair(benchmark::State& state) {
  const Graph& g = p9b_pair();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalP9BPair);

void BM_AutomorphismGroupK44e(benchmark::State& state) {
  const Graph g = k44_minus_e();
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g).order);
}
BENCHMARK(BM_AutomorphismGroupK44e);

void BM_K6ModelsInK7(benchmark::State& state) {
  const Graph k6 = complete_graph(6);
  const Graph host = k7_minus_nonadjacent();
  for (auto _ : state) {
    benchmark::DoNotOptimize(for_each_minor_model(k6, host, [](const MinorModel&) { return true; }));
  }
}
BENCHMARK(BM_K6ModelsInK7)->Unit(benchmark::kMillisecond);

void BM_PetersenModelsInP9BPair(benchmark::State& state) {
  const Graph& pattern = default_family().by_name("P9").graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(for_each_minor_model(pattern, p9b_pair(), [](const MinorModel&) { return true; }));
  }
}
BENCHMARK(BM_PetersenModelsInP9BPair)->Unit(benchmark::kMillisecond);

void BM_EngineBuildK6Pair(benchmark::State& state) {
  for (auto _ : state) {
    const Engine engine(k6_pair(), default_family(), {});
    benchmark::DoNotOptimize(engine.stats().b_subspaces);
  }
}
BENCHMARK(BM_EngineBuildK6Pair)->Unit(benchmark::kMillisecond);

// Per-assignment rule kernels on a prebuilt engine.
void BM_RuleKernel(benchmark::State& state) {
  static const Engine engine(k6_pair(), default_family(), {});
  const std::uint64_t n = std::uint64_t{1} << engine.space()->dim();
  std::mt19937_64 rng(1);
  const char which = static_cast<char>(state.range(0));
  for (auto _ : state) {
    const std::uint64_t phi = rng() % n;
    Engine::Ref r;
    if (which == 'A') r = engine.rule_a(phi);
    if (which == 'B') r = engine.rule_b(phi);
    if (which == 'C') r = engine.rule_c(phi);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RuleKernel)->Arg('A')->Arg('B')->Arg('C');

void BM_CertifyK6Pair(benchmark::State& state) {
  for (auto _ : state) {
    EngineOptions o;
    o.jobs = static_cast<int>(state.range(0));
    const Engine e(k6_pair(), default_family(), o);
    benchmark::DoNotOptimize(certify(e).verdict);
  }
}
BENCHMARK(BM_CertifyK6Pair)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CertifyK7Adjacent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(certify(k7_minus_adjacent(), default_family()).verdict);
}
BENCHMARK(BM_CertifyK7Adjacent)->Unit(benchmark::kMillisecond);

void BM_CatalogK2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_catalog(2, default_family(), static_cast<int>(state.range(0))).entries.size());
}
BENCHMARK(BM_CatalogK2)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
