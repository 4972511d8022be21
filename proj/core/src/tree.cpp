#include "treeggm/tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "treeggm/errors.hpp"
#include "treeggm/rng.hpp"

namespace treeggm {

WeightedTree::WeightedTree(int d, std::vector<WeightedEdge> edges)
    : d_(d), edges_(std::move(edges)) {
  if (d_ < 2) throw parameter_error("WeightedTree: need at least 2 nodes");
  if (static_cast<int>(edges_.size()) != d_ - 1) {
    throw data_error("WeightedTree: a tree on " + std::to_string(d_) + " nodes needs " +
                     std::to_string(d_ - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  adj_.assign(d_, {});
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= d_ || e.v < 0 || e.v >= d_) {
      throw data_error("WeightedTree: edge endpoint out of range");
    }
    if (e.u == e.v) throw data_error("WeightedTree: self-loop");
    if (!(std::abs(e.rho) > 0.0 && std::abs(e.rho) < 1.0)) {
      throw data_error("WeightedTree: edge weight must satisfy 0 < |rho| < 1");
    }
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) throw data_error("WeightedTree: duplicate edge");
    adj_[e.u].emplace_back(e.v, e.rho);
    adj_[e.v].emplace_back(e.u, e.rho);
  }
  // d-1 distinct edges + connectivity implies acyclicity.
  std::vector<char> visited(d_, 0);
  std::queue<int> frontier;
  frontier.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop();
    for (auto [y, w] : adj_[x]) {
      (void)w;
      if (!visited[y]) {
        visited[y] = 1;
        ++reached;
        frontier.push(y);
      }
    }
  }
  if (reached != d_) throw data_error("WeightedTree: graph is not connected");
}

std::vector<std::pair<int, int>> WeightedTree::edge_set() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(std::minmax(e.u, e.v));
  std::sort(out.begin(), out.end());
  return out;
}

WeightedTree random_tree(int d, double weight_low, double weight_high, std::uint64_t seed) {
  if (d < 2) throw parameter_error("random_tree: d must be >= 2");
  if (!(weight_low > 0.0 && weight_low <= weight_high && weight_high < 1.0)) {
    throw parameter_error("random_tree: need 0 < weight_low <= weight_high < 1");
  }
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> node(0, d - 1);
  std::uniform_real_distribution<double> weight(weight_low, weight_high);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(d - 1);
  if (d == 2) {
    edges.emplace_back(0, 1);
  } else {
    // Decode a uniform Pruefer sequence; every labeled tree is equally likely.
    std::vector<int> pruefer(d - 2);
    for (int& p : pruefer) p = node(rng);
    std::vector<int> degree(d, 1);
    for (int p : pruefer) ++degree[p];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int i = 0; i < d; ++i) {
      if (degree[i] == 1) leaves.push(i);
    }
    for (int p : pruefer) {
      int leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, p);
      if (--degree[p] == 1) leaves.push(p);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
  }
  std::vector<WeightedEdge> weighted;
  weighted.reserve(edges.size());
  for (auto [u, v] : edges) weighted.push_back({u, v, weight(rng)});
  return WeightedTree(d, std::move(weighted));
}

WeightedTree star_tree(int d, double rho) {
  if (d < 2) throw parameter_error("star_tree: d must be >= 2");
  if (!(std::abs(rho) > 0.0 && std::abs(rho) < 1.0)) {
    throw parameter_error("star_tree: need 0 < |rho| < 1");
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(d - 1);
  for (int j = 1; j < d; ++j) edges.push_back({0, j, rho});
  return WeightedTree(d, std::move(edges));
}

void write_tree(const WeightedTree& tree, std::ostream& out) {
  out << "d=" << tree.node_count() << "\n";
  char buf[64];
  for (const auto& e : tree.edges()) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.u, e.v, e.rho);
    out << buf;
  }
}

WeightedTree read_tree(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw data_error("tree file: empty input");
  int d = 0;
  if (std::sscanf(line.c_str(), "d=%d", &d) != 1) {
    throw data_error("tree file: expected header 'd=<n>', got '" + line + "'");
  }
  std::vector<WeightedEdge> edges;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    WeightedEdge e;
    if (!(ss >> e.u >> e.v >> e.rho)) {
      throw data_error("tree file: malformed edge at line " + std::to_string(lineno));
    }
    edges.push_back(e);
  }
  try {
    return WeightedTree(d, std::move(edges));
  } catch (const std::exception& ex) {
    throw data_error(std::string("tree file: ") + ex.what());
  }
}

}  // namespace treeggm
