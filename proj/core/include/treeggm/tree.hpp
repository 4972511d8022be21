#ifndef TREEGGM_TREE_HPP
#define TREEGGM_TREE_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace treeggm {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double rho = 0.0;
};

/// A spanning tree over nodes {0..d-1} with per-edge correlation weights.
/// Construction validates the full invariant: exactly d-1 edges, connected,
/// acyclic, no self-loops or duplicates, and 0 < |rho| < 1 on every edge.
class WeightedTree {
 public:
  WeightedTree(int d, std::vector<WeightedEdge> edges);

  int node_count() const { return d_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  /// Adjacency list as (neighbor, weight) pairs.
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const { return adj_; }

  /// Canonical edge set: (min,max) pairs sorted ascending, weights dropped.
  std::vector<std::pair<int, int>> edge_set() const;

 private:
  int d_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

/// Uniformly random labeled tree (random Pruefer sequence decoded to a tree)
/// with i.i.d. uniform edge weights in [weight_low, weight_high].
WeightedTree random_tree(int d, double weight_low, double weight_high, std::uint64_t seed);

/// Star with hub 0: edges (0,j) for j=1..d-1, all weighted rho.
WeightedTree star_tree(int d, double rho);

/// Edge-list text format: header "d=<n>", then one "u v rho" line per edge.
void write_tree(const WeightedTree& tree, std::ostream& out);
WeightedTree read_tree(std::istream& in);

}  // namespace treeggm

#endif
