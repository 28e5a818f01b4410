// Serial reference against the OpenMP kernels on full Specht batches.
// Arguments: shape index, workers (0 means serial).

#include <benchmark/benchmark.h>

#include "kzres/kernels.hpp"
#include "kzres/kzsolve.hpp"
#include "kzres/specht.hpp"

using namespace kzres;

namespace {

struct Workload {
  Partition shape;
  int m;
};

const std::vector<Workload>& workloads() {
  static const std::vector<Workload> w{{Partition({2, 1, 1}), 1}, {Partition({3, 2}), 1}, {Partition({2, 2}), 2}};
  return w;
}

const ResidueBatch& batch_for(std::size_t i) {
  static std::vector<ResidueBatch> cache = [] {
    std::vector<ResidueBatch> out;
    for (const auto& w : workloads()) {
      const SpechtModule module(w.shape);
      std::vector<Numbering> forms;
      for (const auto& u : module.tabloids()) forms.push_back(representative(u));
      out.push_back(residue_batch(w.shape, w.m, module.tableaux(), forms));
    }
    return out;
  }();
  return cache[i];
}

void label(benchmark::State& state) {
  const auto& w = workloads()[state.range(0)];
  state.SetLabel(w.shape.to_string() + " m=" + std::to_string(w.m) +
                 (state.range(1) == 0 ? " serial" : " workers=" + std::to_string(state.range(1))));
}

void BM_Residues(benchmark::State& state) {
  const auto& batch = batch_for(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto out = workers == 0 ? evaluate_residues_serial(batch) : evaluate_residues_parallel(batch, workers);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch.task_count()));
  label(state);
}

void BM_Normalize(benchmark::State& state) {
  const auto& batch = batch_for(state.range(0));
  const int nvars = workloads()[state.range(0)].shape.size();
  const auto sums = evaluate_residues_serial(batch);
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto out = workers == 0 ? normalize_serial(sums, nvars) : normalize_parallel(sums, nvars, workers);
    benchmark::DoNotOptimize(out);
  }
  label(state);
}

void args(benchmark::internal::Benchmark* b) {
  for (int shape = 0; shape < 3; ++shape)
    for (int workers : {0, 1, 2, 4, 8}) b->Args({shape, workers});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Residues)->Apply(args);
BENCHMARK(BM_Normalize)->Apply(args);

BENCHMARK_MAIN();
