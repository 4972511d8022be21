#include "treeggm/covariance.hpp"

#include <cmath>
#include <vector>

#include "treeggm/errors.hpp"

namespace treeggm {

Covariance::Covariance(Eigen::MatrixXd q) : q_(std::move(q)) {
  if (q_.rows() < 1 || q_.rows() != q_.cols()) {
    throw parameter_error("Covariance: matrix must be square and non-empty");
  }
  for (int r = 0; r < q_.rows(); ++r) {
    if (std::abs(q_(r, r) - 1.0) > 1e-12) {
      throw data_error("Covariance: diagonal must be 1 (unit variances)");
    }
    for (int s = r + 1; s < q_.cols(); ++s) {
      if (std::abs(q_(r, s) - q_(s, r)) > 1e-12 || !std::isfinite(q_(r, s))) {
        throw data_error("Covariance: matrix must be symmetric and finite");
      }
    }
  }
}

Eigen::MatrixXd Covariance::cholesky() const {
  Eigen::LLT<Eigen::MatrixXd> llt(q_);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  Eigen::MatrixXd jittered = q_;
  jittered.diagonal().array() += 1e-12;
  Eigen::LLT<Eigen::MatrixXd> retry(jittered);
  if (retry.info() == Eigen::Success) return retry.matrixL();
  throw numeric_error("Covariance: Cholesky factorization failed (matrix not PSD)");
}

Covariance covariance_from_tree(const WeightedTree& tree) {
  const int d = tree.node_count();
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(d, d);
  const auto& adj = tree.adjacency();
  // DFS from each root, accumulating the path product; O(d^2) total.
  std::vector<std::pair<int, double>> stack;
  for (int root = 0; root < d; ++root) {
    std::vector<char> visited(d, 0);
    visited[root] = 1;
    stack.clear();
    stack.emplace_back(root, 1.0);
    while (!stack.empty()) {
      auto [x, prod] = stack.back();
      stack.pop_back();
      for (auto [y, w] : adj[x]) {
        if (!visited[y]) {
          visited[y] = 1;
          q(root, y) = prod * w;
          stack.emplace_back(y, prod * w);
        }
      }
    }
  }
  return Covariance(std::move(q));
}

}  // namespace treeggm
