#ifndef TREEGGM_COVARIANCE_HPP
#define TREEGGM_COVARIANCE_HPP

#include <Eigen/Dense>

#include "treeggm/tree.hpp"

namespace treeggm {

/// Correlation matrix of a unit-variance GGM: symmetric with unit diagonal.
class Covariance {
 public:
  explicit Covariance(Eigen::MatrixXd q);

  int dim() const { return static_cast<int>(q_.rows()); }
  double operator()(int r, int s) const { return q_(r, s); }
  const Eigen::MatrixXd& matrix() const { return q_; }

  /// Lower Cholesky factor. Retries once with 1e-12 added to the diagonal if
  /// plain factorization fails at machine precision; throws numeric_error on
  /// a second failure.
  Eigen::MatrixXd cholesky() const;

 private:
  Eigen::MatrixXd q_;
};

/// Q_rs = product of edge weights on the unique tree path from r to s.
Covariance covariance_from_tree(const WeightedTree& tree);

}  // namespace treeggm

#endif
