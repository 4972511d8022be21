#ifndef TREEGGM_MATH_HPP
#define TREEGGM_MATH_HPP

namespace treeggm {

/// Standard normal density.
double normal_pdf(double x);

/// Standard normal CDF, evaluated via erfc for accuracy in both tails.
double normal_cdf(double x);

/// Inverse of normal_cdf for p in (0, 1); p=0 and p=1 map to -/+infinity.
/// Accurate to |Phi(result) - p| < 1e-15 over the range used here
/// (rational initial guess refined by Newton steps on the CDF).
double normal_quantile(double p);

}  // namespace treeggm

#endif
