#include "treeggm/sampling.hpp"

#include <random>

#include "treeggm/errors.hpp"
#include "treeggm/rng.hpp"

namespace treeggm {

SampleMatrix sample_gaussian(const Covariance& cov, int n, std::uint64_t seed) {
  if (n < 1) throw parameter_error("sample_gaussian: n must be >= 1");
  const int d = cov.dim();
  const Eigen::MatrixXd l = cov.cholesky();
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  Eigen::MatrixXd z(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) z(i, j) = gauss(rng);
  }
  SampleMatrix out;
  out.values.noalias() = z * l.transpose();
  return out;
}

ShardSet shard(const SampleMatrix& samples) {
  ShardSet out;
  out.shards.reserve(samples.d());
  for (int j = 0; j < samples.d(); ++j) {
    Shard s;
    s.machine = j;
    s.values.assign(samples.values.col(j).begin(), samples.values.col(j).end());
    out.shards.push_back(std::move(s));
  }
  return out;
}

SampleMatrix assemble(const ShardSet& shards) {
  const int d = shards.d();
  if (d == 0) throw data_error("assemble: empty shard set");
  const int n = shards.n();
  SampleMatrix out;
  out.values.resize(n, d);
  for (int j = 0; j < d; ++j) {
    const auto& s = shards.shards[j];
    if (static_cast<int>(s.values.size()) != n) {
      throw data_error("assemble: shards have inconsistent lengths");
    }
    for (int i = 0; i < n; ++i) out.values(i, j) = s.values[i];
  }
  return out;
}

}  // namespace treeggm
