#include <benchmark/benchmark.h>

#include <random>

#include "treeggm/chowliu.hpp"
#include "treeggm/covariance.hpp"
#include "treeggm/estimators.hpp"
#include "treeggm/oracle.hpp"
#include "treeggm/quantizer.hpp"
#include "treeggm/rng.hpp"
#include "treeggm/sampling.hpp"
#include "treeggm/tree.hpp"

using namespace treeggm;

namespace {

ShardSet make_shards(int d, int n, std::uint64_t seed) {
  const auto tree = random_tree(d, 0.1, 0.9, seed);
  return shard(sample_gaussian(covariance_from_tree(tree), n, seed + 1));
}

void BM_BuildCodebook(benchmark::State& state) {
  const int rate = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Codebook cb(rate);
    benchmark::DoNotOptimize(cb.sigma_u_sq());
  }
}
BENCHMARK(BM_BuildCodebook)->Arg(4)->Arg(8)->Arg(12);

void BM_PersymEncode(benchmark::State& state) {
  const Codebook cb(static_cast<int>(state.range(0)));
  auto rng = make_rng(1);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Shard s{0, std::vector<double>(100000)};
  for (double& x : s.values) x = gauss(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(persym_encode(s, cb));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.values.size()));
}
BENCHMARK(BM_PersymEncode)->Arg(1)->Arg(4)->Arg(8);

void BM_SignWeights(benchmark::State& state) {
  const auto shards = make_shards(20, static_cast<int>(state.range(0)), 2);
  std::vector<QuantizedShard> enc;
  for (const auto& s : shards.shards) enc.push_back(sign_encode(s));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weights_from_signs(enc));
  }
}
BENCHMARK(BM_SignWeights)->Arg(1000)->Arg(4000);

void BM_RawWeights(benchmark::State& state) {
  const auto shards = make_shards(20, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weights_from_raw(shards));
  }
}
BENCHMARK(BM_RawWeights)->Arg(1000)->Arg(4000);

void BM_Kruskal(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto rng = make_rng(4);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  EdgeWeights w(d);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) w.set(j, k, uni(rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(kruskal_mwst(w));
  }
}
BENCHMARK(BM_Kruskal)->Arg(20)->Arg(100);

void BM_SampleGaussian(benchmark::State& state) {
  const auto cov = covariance_from_tree(random_tree(20, 0.1, 0.9, 5));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_gaussian(cov, static_cast<int>(state.range(0)), ++seed));
  }
}
BENCHMARK(BM_SampleGaussian)->Arg(1000)->Arg(4000);

void BM_ExactCrossover(benchmark::State& state) {
  const auto params = shared_node_probs(0.9, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_crossover(params, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ExactCrossover)->Arg(500)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
