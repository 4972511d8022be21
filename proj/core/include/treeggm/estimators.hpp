#ifndef TREEGGM_ESTIMATORS_HPP
#define TREEGGM_ESTIMATORS_HPP

#include <span>

#include "treeggm/quantizer.hpp"

namespace treeggm {

/// Mutual information of jointly normal unit-variance variables, in nats:
/// -1/2 ln(1 - rho^2). Requires |rho| < 1.
double gaussian_mi(double rho);

/// Sign-agreement probability theta = 1/2 + arcsin(rho)/pi.
double theta_of_rho(double rho);

/// Mutual information of the sign pair in bits: 1 - h(theta) with h the
/// binary entropy (base 2, 0 log 0 = 0).
double binary_mi(double theta);

struct PairStats {
  double theta_hat = 0.0;  ///< fraction of samples with agreeing signs
  double rho_bar = 0.0;    ///< sign sample correlation, 2*theta_hat - 1
  int n = 0;
};

/// Unbiased minimum-variance estimate of theta from two sign shards:
/// the fraction of positions where u_j * u_k = 1.
PairStats estimate_theta(const QuantizedShard& a, const QuantizedShard& b);

/// Sample correlation of zero-mean unit-variance data: mean of element-wise
/// products, no centering or normalization.
double sample_corr(std::span<const double> a, std::span<const double> b);

/// Unbiased estimator of rho^2: n/(n+1) (rho_bar^2 - 1/n). May be negative
/// for small samples; deliberately not clamped.
double unbiased_rho_sq(double rho_bar, int n);

}  // namespace treeggm

#endif
