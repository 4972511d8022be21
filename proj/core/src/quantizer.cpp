#include "treeggm/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "treeggm/errors.hpp"
#include "treeggm/math.hpp"

namespace treeggm {

Codebook::Codebook(int rate) : rate_(rate) {
  if (rate < 1 || rate > 16) throw parameter_error("Codebook: rate must be in [1, 16]");
  const int m = 1 << rate;
  const double mass = std::ldexp(1.0, -rate);  // 2^-R per bin

  boundaries_.resize(m + 1);
  for (int i = 0; i <= m; ++i) boundaries_[i] = normal_quantile(i * mass);
  // Make the boundary grid exactly antisymmetric (the halves come from
  // independently rounded quantile evaluations).
  for (int i = 0; i <= m / 2; ++i) {
    const double b = 0.5 * (boundaries_[m - i] - boundaries_[i]);
    boundaries_[i] = -b;
    boundaries_[m - i] = b;
  }

  centroids_.resize(m);
  for (int i = 0; i < m; ++i) {
    const double lo = boundaries_[i];
    const double hi = boundaries_[i + 1];
    const double phi_lo = std::isinf(lo) ? 0.0 : normal_pdf(lo);
    const double phi_hi = std::isinf(hi) ? 0.0 : normal_pdf(hi);
    centroids_[i] = (phi_lo - phi_hi) / mass;
  }
  // Enforce exact antisymmetry; the analytic centroids are symmetric but the
  // two halves are computed from independently rounded quantiles.
  for (int i = 0; i < m / 2; ++i) {
    const double c = 0.5 * (centroids_[m - 1 - i] - centroids_[i]);
    centroids_[i] = -c;
    centroids_[m - 1 - i] = c;
  }
  double sum_sq = 0.0;
  for (double c : centroids_) sum_sq += c * c;
  sigma_u_sq_ = mass * sum_sq;
}

int Codebook::bin_index(double x) const {
  if (!std::isfinite(x)) throw data_error("Codebook: cannot encode non-finite value");
  auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), x);
  return static_cast<int>(it - boundaries_.begin());
}

double Codebook::centroid(int index) const {
  if (index < 1 || index > bins()) throw data_error("Codebook: bin index out of range");
  return centroids_[index - 1];
}

void Codebook::dump(std::ostream& out) const {
  char buf[96];
  for (int i = 1; i <= bins(); ++i) {
    std::snprintf(buf, sizeof buf, "%d %.15g %.15g\n", i, boundaries_[i - 1], centroids_[i - 1]);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "sigma_u_sq=%.15g\n", sigma_u_sq_);
  out << buf;
}

QuantizedShard sign_encode(const Shard& shard) {
  QuantizedShard q;
  q.machine = shard.machine;
  q.rate = 1;
  q.indices.resize(shard.values.size());
  for (std::size_t i = 0; i < shard.values.size(); ++i) {
    if (!std::isfinite(shard.values[i])) {
      throw data_error("sign_encode: cannot encode non-finite value");
    }
    q.indices[i] = shard.values[i] < 0.0 ? 1 : 2;
  }
  return q;
}

QuantizedShard persym_encode(const Shard& shard, const Codebook& cb) {
  QuantizedShard q;
  q.machine = shard.machine;
  q.rate = cb.rate();
  q.indices.resize(shard.values.size());
  for (std::size_t i = 0; i < shard.values.size(); ++i) {
    q.indices[i] = static_cast<std::uint16_t>(cb.bin_index(shard.values[i]));
  }
  return q;
}

std::vector<double> decode(const QuantizedShard& q, const Codebook& cb) {
  if (q.rate != cb.rate()) throw data_error("decode: shard rate does not match codebook");
  std::vector<double> out(q.indices.size());
  for (std::size_t i = 0; i < q.indices.size(); ++i) out[i] = cb.centroid(q.indices[i]);
  return out;
}

double reconstruction_distortion(const Codebook& cb) { return 1.0 - cb.sigma_u_sq(); }

}  // namespace treeggm
