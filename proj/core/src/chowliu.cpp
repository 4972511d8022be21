#include "treeggm/chowliu.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "treeggm/errors.hpp"
#include "treeggm/estimators.hpp"

namespace treeggm {

EdgeWeights::EdgeWeights(int d) {
  if (d < 2) throw parameter_error("EdgeWeights: need d >= 2");
  w_ = Eigen::MatrixXd::Zero(d, d);
}

void EdgeWeights::set(int j, int k, double w) {
  if (j < 0 || k < 0 || j >= dim() || k >= dim() || j == k) {
    throw parameter_error("EdgeWeights: bad index pair");
  }
  if (!std::isfinite(w)) throw data_error("EdgeWeights: weight must be finite");
  w_(j, k) = w;
  w_(k, j) = w;
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) return false;
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    size_[ra] += size_[rb];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

struct ScoredEdge {
  double w;
  int u, v;  // u < v
};

}  // namespace

EstimatedTree kruskal_mwst(const EdgeWeights& weights) {
  const int d = weights.dim();
  std::vector<ScoredEdge> edges;
  edges.reserve(d * (d - 1) / 2);
  for (int u = 0; u < d; ++u) {
    for (int v = u + 1; v < d; ++v) {
      if (!std::isfinite(weights(u, v))) {
        throw data_error("kruskal_mwst: non-finite edge weight");
      }
      edges.push_back({weights(u, v), u, v});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const ScoredEdge& a, const ScoredEdge& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  EstimatedTree tree;
  tree.d = d;
  tree.edges.reserve(d - 1);
  UnionFind uf(d);
  for (const auto& e : edges) {
    if (uf.unite(e.u, e.v)) {
      tree.edges.emplace_back(e.u, e.v);
      if (static_cast<int>(tree.edges.size()) == d - 1) break;
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

EdgeWeights weights_from_signs(const std::vector<QuantizedShard>& shards) {
  const int d = static_cast<int>(shards.size());
  if (d < 2) throw parameter_error("weights_from_signs: need at least 2 shards");
  EdgeWeights w(d);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const PairStats stats = estimate_theta(shards[j], shards[k]);
      w.set(j, k, std::abs(stats.theta_hat - 0.5));
    }
  }
  return w;
}

EdgeWeights weights_from_persym(const std::vector<QuantizedShard>& shards, const Codebook& cb) {
  const int d = static_cast<int>(shards.size());
  if (d < 2) throw parameter_error("weights_from_persym: need at least 2 shards");
  const int n = shards[0].n();
  std::vector<std::vector<double>> decoded(d);
  for (int j = 0; j < d; ++j) {
    if (shards[j].n() != n) throw data_error("weights_from_persym: length mismatch");
    decoded[j] = decode(shards[j], cb);
  }
  EdgeWeights w(d);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      w.set(j, k, unbiased_rho_sq(sample_corr(decoded[j], decoded[k]), n));
    }
  }
  return w;
}

EdgeWeights weights_from_raw(const ShardSet& shards) {
  const int d = shards.d();
  if (d < 2) throw parameter_error("weights_from_raw: need at least 2 shards");
  constexpr double kMaxAbsCorr = 1.0 - 1e-12;
  EdgeWeights w(d);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      double r = sample_corr(shards.shards[j].values, shards.shards[k].values);
      r = std::clamp(r, -kMaxAbsCorr, kMaxAbsCorr);
      w.set(j, k, gaussian_mi(r));
    }
  }
  return w;
}

void write_tree(const EstimatedTree& tree, std::ostream& out) {
  out << "d=" << tree.d << "\n";
  for (const auto& [u, v] : tree.edges) out << u << " " << v << "\n";
}

EstimatedTree read_edge_set(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw data_error("edge list: empty input");
  int d = 0;
  if (std::sscanf(line.c_str(), "d=%d", &d) != 1 || d < 2) {
    throw data_error("edge list: expected header 'd=<n>', got '" + line + "'");
  }
  EstimatedTree tree;
  tree.d = d;
  std::set<std::pair<int, int>> seen;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    int u = 0, v = 0;
    if (!(ss >> u >> v)) {
      throw data_error("edge list: malformed edge at line " + std::to_string(lineno));
    }
    if (u < 0 || v < 0 || u >= d || v >= d || u == v) {
      throw data_error("edge list: bad endpoints at line " + std::to_string(lineno));
    }
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw data_error("edge list: duplicate edge at line " + std::to_string(lineno));
    }
    tree.edges.push_back(key);
  }
  if (static_cast<int>(tree.edges.size()) != d - 1) {
    throw data_error("edge list: not a spanning tree (wrong edge count)");
  }
  UnionFind uf(d);
  for (auto [u, v] : tree.edges) {
    if (!uf.unite(u, v)) throw data_error("edge list: contains a cycle");
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

}  // namespace treeggm
