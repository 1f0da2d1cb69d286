#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "freqspec/dataset.hpp"
#include "freqspec/exact.hpp"
#include "freqspec/isotonic.hpp"
#include "freqspec/sampler.hpp"
#include "freqspec/spectrum.hpp"

namespace {

const freqspec::TransactionDatabase& chess() {
  static const auto db = freqspec::load_fimi_file(std::filesystem::path(FREQSPEC_DATA_DIR) / "chess.dat");
  return db;
}

void BM_IntersectionCount(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 gen(1);
  freqspec::BitVector a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gen() & 1) a.set(i);
    if (gen() & 1) b.set(i);
  }
  for (auto _ : state) benchmark::DoNotOptimize(freqspec::intersection_count(a, b));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 2 *
                          static_cast<std::int64_t>(a.words().size_bytes()));
}
BENCHMARK(BM_IntersectionCount)->Arg(3196)->Arg(8124)->Arg(1 << 20);

void BM_SamplePathChess(benchmark::State& state) {
  const auto& db = chess();
  const auto sigma = static_cast<std::size_t>(state.range(0));
  std::uint64_t k = 0;
  for (auto _ : state) {
    auto rng = freqspec::derive_path_rng(0, k++);
    benchmark::DoNotOptimize(freqspec::sample_path(db, sigma, rng));
  }
}
BENCHMARK(BM_SamplePathChess)->Arg(1)->Arg(500)->Arg(1000)->Arg(2500);

void BM_EstimateSpectrumChess(benchmark::State& state) {
  freqspec::SpectrumQuery q;
  q.n_paths = 5000;
  for (auto _ : state) benchmark::DoNotOptimize(freqspec::estimate_spectrum(chess(), q, {1}));
}
BENCHMARK(BM_EstimateSpectrumChess)->Unit(benchmark::kMillisecond);

void BM_Pava(benchmark::State& state) {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> noise(0, 50);
  std::vector<freqspec::WeightedPoint> pts;
  for (int i = 0; i < state.range(0); ++i) pts.push_back({double(i), 1e4 / (i + 1) + noise(gen), 1});
  for (auto _ : state) benchmark::DoNotOptimize(freqspec::pava_decreasing(pts));
}
BENCHMARK(BM_Pava)->Arg(1000)->Arg(5000);

void BM_ExactChessHighSigma(benchmark::State& state) {
  const auto sigma = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(freqspec::exact_spectrum(chess(), sigma));
}
BENCHMARK(BM_ExactChessHighSigma)->Arg(3000)->Arg(2800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
