#include <benchmark/benchmark.h>

#include "asmlab/covering.hpp"
#include "asmlab/dbg.hpp"
#include "asmlab/kmer.hpp"
#include "asmlab/simulate.hpp"
#include "asmlab/unitig.hpp"

namespace {

asmlab::ReadSet make_reads(std::size_t genome_length, std::size_t num_reads, std::size_t len, double error_rate) {
  const auto genome = asmlab::random_genome(genome_length, std::nullopt, 17);
  asmlab::SimulationProfile p;
  p.genome_length = genome_length;
  p.num_reads = num_reads;
  p.read_length = len;
  p.error_rate = error_rate;
  p.seed = 3;
  return asmlab::uniform_reads(genome, p);
}

// The stretch target: 100 000 reads of 100 nt at k = 31.
void BM_BuildGraph(benchmark::State& state) {
  const auto reads = make_reads(1000000, static_cast<std::size_t>(state.range(0)), 100, 0.01);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    auto g = asmlab::DeBruijnGraph::build(reads, 31, nullptr, threads);
    benchmark::DoNotOptimize(g.num_edges());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(reads.size()));
}
BENCHMARK(BM_BuildGraph)->Args({10000, 1})->Args({100000, 1})->Args({100000, 4})->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const auto reads = make_reads(200000, 20000, 100, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(asmlab::spectrum_of_set(reads, 31).distinct());
}
BENCHMARK(BM_Spectrum)->Unit(benchmark::kMillisecond);

void BM_Unitigs(benchmark::State& state) {
  const auto g = asmlab::DeBruijnGraph::build(make_reads(100000, 20000, 100, 0.005), 31);
  for (auto _ : state) benchmark::DoNotOptimize(asmlab::maximal_unitigs(g.graph()).unitigs.size());
}
BENCHMARK(BM_Unitigs)->Unit(benchmark::kMillisecond);

void BM_CoveringWalk(benchmark::State& state) {
  const auto genome = asmlab::random_genome(static_cast<std::size_t>(state.range(0)), asmlab::PlantedRepeat{200, 3}, 5);
  const auto g = asmlab::DeBruijnGraph::build(asmlab::idealized_reads(genome, 100), 31);
  for (auto _ : state) benchmark::DoNotOptimize(asmlab::shortest_edge_covering_walk(g).size());
}
BENCHMARK(BM_CoveringWalk)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
