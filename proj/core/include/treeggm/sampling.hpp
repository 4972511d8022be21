#ifndef TREEGGM_SAMPLING_HPP
#define TREEGGM_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "treeggm/covariance.hpp"

namespace treeggm {

/// n x d matrix of samples; row i is one observation vector.
struct SampleMatrix {
  Eigen::MatrixXd values;

  int n() const { return static_cast<int>(values.rows()); }
  int d() const { return static_cast<int>(values.cols()); }
};

/// One machine's local dataset: its dimension of every sample.
struct Shard {
  int machine = 0;
  std::vector<double> values;
};

/// Vertically partitioned dataset: shard j holds column j.
struct ShardSet {
  std::vector<Shard> shards;

  int d() const { return static_cast<int>(shards.size()); }
  int n() const { return shards.empty() ? 0 : static_cast<int>(shards[0].values.size()); }
};

/// Draws n i.i.d. rows from N(0, Q) as z L^T with L the Cholesky factor.
/// Bit-identical output for identical (cov, n, seed).
SampleMatrix sample_gaussian(const Covariance& cov, int n, std::uint64_t seed);

/// Splits columns into per-machine shards (lossless).
ShardSet shard(const SampleMatrix& samples);

/// Inverse of shard(): reassembles the original matrix bit-exactly.
SampleMatrix assemble(const ShardSet& shards);

}  // namespace treeggm

#endif
