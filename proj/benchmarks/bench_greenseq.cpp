#include <benchmark/benchmark.h>

#include "greenseq/count.hpp"
#include "greenseq/oracle.hpp"
#include "greenseq/report.hpp"

using namespace greenseq;

static void BM_Catalog(benchmark::State& state, const char* preset) {
  Quiver q = make_preset(preset);
  for (auto _ : state) {
    Catalog cat = make_catalog(q);
    benchmark::DoNotOptimize(cat.size());
  }
}
BENCHMARK_CAPTURE(BM_Catalog, dtilde4, "Dtilde:4");
BENCHMARK_CAPTURE(BM_Catalog, etilde6, "Etilde:6");
BENCHMARK_CAPTURE(BM_Catalog, etilde8, "Etilde:8");

static void BM_PrecTable(benchmark::State& state, const char* preset) {
  Catalog cat = make_catalog(make_preset(preset));
  for (auto _ : state) {
    PrecTable table = build_prec_table(cat);
    benchmark::DoNotOptimize(table.coexist_pair_count());
  }
}
BENCHMARK_CAPTURE(BM_PrecTable, dtilde4, "Dtilde:4");
BENCHMARK_CAPTURE(BM_PrecTable, etilde6, "Etilde:6");

static void BM_HasseBuild(benchmark::State& state, const char* preset) {
  Catalog cat = make_catalog(make_preset(preset));
  PrecTable table = build_prec_table(cat);
  for (auto _ : state) {
    HasseGraph h = prune_to_finite(build_hasse(cat, table));
    benchmark::DoNotOptimize(h.vertex_count());
  }
}
BENCHMARK_CAPTURE(BM_HasseBuild, dtilde4, "Dtilde4-paper");
BENCHMARK_CAPTURE(BM_HasseBuild, dtilde5, "Dtilde:5");

static void BM_CountPaths(benchmark::State& state, const char* preset) {
  Catalog cat = make_catalog(make_preset(preset));
  PrecTable table = build_prec_table(cat);
  HasseGraph h = prune_to_finite(build_hasse(cat, table));
  std::vector<uint32_t> order = topo_sort(h);
  for (auto _ : state) {
    LengthDistribution dist = count_paths(h, order);
    benchmark::DoNotOptimize(dist.counts.size());
  }
}
BENCHMARK_CAPTURE(BM_CountPaths, dtilde4, "Dtilde4-paper");
BENCHMARK_CAPTURE(BM_CountPaths, dtilde5, "Dtilde:5");

static void BM_OracleA3(benchmark::State& state) {
  Quiver q = make_preset("A:3");
  for (auto _ : state) {
    LengthDistribution dist = enumerate_mgs(q, 6);
    benchmark::DoNotOptimize(dist.counts.size());
  }
}
BENCHMARK(BM_OracleA3);

BENCHMARK_MAIN();
