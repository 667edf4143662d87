#include <benchmark/benchmark.h>

#include "corpus.hpp"
#include "dlab/cli.hpp"
#include "dlab/coloring.hpp"
#include "dlab/fixtures.hpp"

using namespace dlab;

namespace {

const std::vector<BatchInput>& inputs() {
  static const std::vector<BatchInput> all = [] {
    std::vector<BatchInput> out;
    auto gen = corpus::generate(11, {4, 6, 9});
    for (const auto& level : gen.by_order)
      for (const auto& g : level) out.push_back({"", corpus::embed(g), std::nullopt});
    return out;
  }();
  return all;
}

void BM_BatchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(batch_process_serial(inputs()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs().size()));
}

void BM_BatchParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(batch_process_parallel(inputs()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(inputs().size()));
}

void BM_ExtensionSerial(benchmark::State& state) {
  const PlaneGraph& g = fixture("F10").graph;
  for (auto _ : state) benchmark::DoNotOptimize(check_extension_property(g));
}

void BM_ExtensionParallel(benchmark::State& state) {
  const PlaneGraph& g = fixture("F10").graph;
  for (auto _ : state) benchmark::DoNotOptimize(check_extension_property_parallel(g));
}

}  // namespace

BENCHMARK(BM_BatchSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BatchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExtensionSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExtensionParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

int main(int argc, char** argv) {
  inputs();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
