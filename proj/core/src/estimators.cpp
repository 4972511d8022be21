#include "treeggm/estimators.hpp"

#include <cmath>
#include <numbers>

#include "treeggm/errors.hpp"

namespace treeggm {

double gaussian_mi(double rho) {
  if (!(std::abs(rho) < 1.0)) throw parameter_error("gaussian_mi: need |rho| < 1");
  return -0.5 * std::log1p(-rho * rho);
}

double theta_of_rho(double rho) {
  if (!(std::abs(rho) <= 1.0)) throw parameter_error("theta_of_rho: need |rho| <= 1");
  return 0.5 + std::asin(rho) / std::numbers::pi;
}

double binary_mi(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw parameter_error("binary_mi: need theta in [0, 1]");
  auto term = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return 1.0 - term(theta) - term(1.0 - theta);
}

PairStats estimate_theta(const QuantizedShard& a, const QuantizedShard& b) {
  if (a.rate != 1 || b.rate != 1) throw data_error("estimate_theta: shards must be sign-encoded");
  if (a.n() != b.n() || a.n() < 1) throw data_error("estimate_theta: length mismatch");
  const int n = a.n();
  int agree = 0;
  for (int i = 0; i < n; ++i) agree += a.indices[i] == b.indices[i];
  PairStats out;
  out.n = n;
  out.theta_hat = static_cast<double>(agree) / n;
  out.rho_bar = 2.0 * out.theta_hat - 1.0;
  return out;
}

double sample_corr(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) throw data_error("sample_corr: length mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum / static_cast<double>(a.size());
}

double unbiased_rho_sq(double rho_bar, int n) {
  if (n < 1) throw parameter_error("unbiased_rho_sq: n must be >= 1");
  return (static_cast<double>(n) / (n + 1.0)) * (rho_bar * rho_bar - 1.0 / n);
}

}  // namespace treeggm
