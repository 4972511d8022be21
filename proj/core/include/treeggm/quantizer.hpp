#ifndef TREEGGM_QUANTIZER_HPP
#define TREEGGM_QUANTIZER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "treeggm/sampling.hpp"

namespace treeggm {

/// Per-symbol scalar quantizer for a standard normal: 2^R equally probable
/// bins with conditional-mean centroids.
class Codebook {
 public:
  /// Builds the rate-R codebook: boundaries solve Phi(a_i) = (i-1) 2^-R,
  /// centroids are c_i = 2^R (phi(a_i) - phi(a_{i+1})). R in [1, 16].
  explicit Codebook(int rate);

  int rate() const { return rate_; }
  int bins() const { return static_cast<int>(centroids_.size()); }

  /// 2^R + 1 boundaries; first is -inf, last is +inf.
  const std::vector<double>& boundaries() const { return boundaries_; }
  /// 2^R centroids, strictly increasing, antisymmetric.
  const std::vector<double>& centroids() const { return centroids_; }
  /// Codebook variance 2^-R * sum c_i^2; the reconstruction error is 1 - this.
  double sigma_u_sq() const { return sigma_u_sq_; }

  /// 1-based bin index with half-open bins [a_i, a_{i+1}): values exactly on
  /// a boundary go to the upper bin.
  int bin_index(double x) const;
  double centroid(int index) const;

  /// Text dump: one "i a_i c_i" line per bin plus "sigma_u_sq=<v>",
  /// 15 significant digits.
  void dump(std::ostream& out) const;

 private:
  int rate_;
  std::vector<double> boundaries_;
  std::vector<double> centroids_;
  double sigma_u_sq_;
};

inline Codebook build_codebook(int rate) { return Codebook(rate); }

/// Rate-R encoded shard; indices are 1-based bin ids. The sign method stores
/// indices over {1,2} meaning {-1,+1}.
struct QuantizedShard {
  int machine = 0;
  int rate = 1;
  std::vector<std::uint16_t> indices;

  int n() const { return static_cast<int>(indices.size()); }
};

/// 1-bit sign encoder; sign(0) is defined as +1.
QuantizedShard sign_encode(const Shard& shard);

/// Per-symbol encoder: each value is mapped to its bin index independently.
QuantizedShard persym_encode(const Shard& shard, const Codebook& cb);

/// Element-wise centroid lookup.
std::vector<double> decode(const QuantizedShard& q, const Codebook& cb);

/// Expected reconstruction error E[(x-u)^2] = 1 - sigma_u^2.
double reconstruction_distortion(const Codebook& cb);

}  // namespace treeggm

#endif
