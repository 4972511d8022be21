#ifndef TREEGGM_CHOWLIU_HPP
#define TREEGGM_CHOWLIU_HPP

#include <iosfwd>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "treeggm/quantizer.hpp"
#include "treeggm/sampling.hpp"

namespace treeggm {

/// Symmetric pairwise score matrix fed to the MWST; the diagonal is ignored.
class EdgeWeights {
 public:
  explicit EdgeWeights(int d);

  int dim() const { return static_cast<int>(w_.rows()); }
  double operator()(int j, int k) const { return w_(j, k); }
  void set(int j, int k, double w);

 private:
  Eigen::MatrixXd w_;
};

/// Recovered structure: canonical (min,max) edges, sorted ascending.
struct EstimatedTree {
  int d = 0;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const EstimatedTree&) const = default;
};

/// Maximum-weight spanning tree via Kruskal. Edges are taken in descending
/// weight order with ties broken lexicographically by (min endpoint, max
/// endpoint); the output depends only on that ordering.
EstimatedTree kruskal_mwst(const EdgeWeights& w);

/// Sign pipeline scores: w(j,k) = |theta_hat - 1/2|. Orders pairs identically
/// to 1 - h(theta_hat) since the binary MI is strictly increasing in
/// |theta - 1/2|.
EdgeWeights weights_from_signs(const std::vector<QuantizedShard>& shards);

/// Per-symbol pipeline scores: the unbiased rho^2 estimate of the decoded
/// sample correlation.
EdgeWeights weights_from_persym(const std::vector<QuantizedShard>& shards, const Codebook& cb);

/// Centralized baseline: Gaussian MI of the sample correlation, with |rho|
/// clamped to 1 - 1e-12 to keep Eq-of-MI finite on degenerate data.
EdgeWeights weights_from_raw(const ShardSet& shards);

/// Edge-list text format with weights omitted: "d=<n>" then "u v" lines.
void write_tree(const EstimatedTree& tree, std::ostream& out);

/// Reads an edge list (weights, if present, are ignored) and validates that
/// it forms a spanning tree.
EstimatedTree read_edge_set(std::istream& in);

}  // namespace treeggm

#endif
