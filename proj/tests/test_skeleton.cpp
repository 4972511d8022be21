#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "ingest.hpp"
#include "treeggm/chowliu.hpp"
#include "treeggm/covariance.hpp"
#include "treeggm/parallel.hpp"
#include "treeggm/rng.hpp"
#include "treeggm/sampling.hpp"
#include "treeggm/tree.hpp"

using namespace treeggm;

namespace {

// 20-joint body tree in the usual Kinect order: hip center, spine, shoulder
// center, head, then left/right arm chains and left/right leg chains.
WeightedTree skeleton_tree(std::uint64_t seed) {
  static const std::vector<std::pair<int, int>> kBones = {
      {0, 1},   {1, 2},   {2, 3},                       // spine and head
      {2, 4},   {4, 5},   {5, 6},   {6, 7},             // left arm
      {2, 8},   {8, 9},   {9, 10},  {10, 11},           // right arm
      {0, 12},  {12, 13}, {13, 14}, {14, 15},           // left leg
      {0, 16},  {16, 17}, {17, 18}, {18, 19},           // right leg
  };
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> weight(0.3, 0.9);
  std::vector<WeightedEdge> edges;
  edges.reserve(kBones.size());
  for (auto [u, v] : kBones) edges.push_back({u, v, weight(rng)});
  return WeightedTree(20, std::move(edges));
}

int sign_disagreements(const WeightedTree& truth, int n, std::uint64_t seed) {
  SampleMatrix samples = sample_gaussian(covariance_from_tree(truth), n, seed);
  treeggm::cli::standardize_columns(samples);  // same path the skeleton command runs
  const auto shards = shard(samples);
  std::vector<QuantizedShard> enc;
  enc.reserve(shards.d());
  for (const auto& s : shards.shards) enc.push_back(sign_encode(s));
  const auto est = kruskal_mwst(weights_from_signs(enc));
  const auto truth_edges = truth.edge_set();
  const std::set<std::pair<int, int>> ref(truth_edges.begin(), truth_edges.end());
  int misses = 0;
  for (const auto& e : est.edges) misses += ref.count(e) == 0;
  return misses;
}

}  // namespace

TEST_CASE("synthetic skeleton: raw pipeline recovers the body tree exactly") {
  const auto truth = skeleton_tree(301);
  SampleMatrix samples = sample_gaussian(covariance_from_tree(truth), 200000, 302);
  treeggm::cli::standardize_columns(samples);
  const auto est = kruskal_mwst(weights_from_raw(shard(samples)));
  CHECK(est.edges == truth.edge_set());
}

TEST_CASE("synthetic skeleton: 1-bit sign stays within 3 disagreement edges") {
  constexpr int kTrials = 50;
  std::vector<int> misses(kTrials, 0);
  parallel_for(0, kTrials, [&](int t) {
    const auto truth = skeleton_tree(derive_seed(303, t));
    misses[t] = sign_disagreements(truth, 200000, derive_seed(304, t));
  });
  int within = 0;
  for (int m : misses) within += m <= 3;
  CHECK(within >= 45);  // >= 90% of 50 trials
}
