#include "treeggm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "treeggm/errors.hpp"
#include "treeggm/estimators.hpp"
#include "treeggm/quantizer.hpp"

namespace treeggm {

namespace {
constexpr double kProbTol = 1e-12;

double clamp_prob(double p, const char* what) {
  if (p < -kProbTol || p > 1.0 + kProbTol) {
    throw numeric_error(std::string(what) + ": probability outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}
}  // namespace

CrossoverParams::CrossoverParams(double q0, double q1, double q2) : p0(q0), p1(q1), p2(q2) {
  if (!(p0 >= 0.0 && p0 <= 1.0 && p1 >= 0.0 && p1 <= 1.0 && p2 >= 0.0 && p2 <= 1.0)) {
    throw parameter_error("CrossoverParams: probabilities must lie in [0, 1]");
  }
  if (std::abs(p0 + p1 + p2 - 1.0) > kProbTol) {
    throw parameter_error("CrossoverParams: probabilities must sum to 1");
  }
}

CrossoverParams shared_node_probs(double rho_jk, double rho_ks) {
  if (!(std::abs(rho_jk) <= 1.0 && std::abs(rho_ks) <= 1.0)) {
    throw parameter_error("shared_node_probs: need |rho| <= 1");
  }
  constexpr double pi = std::numbers::pi;
  const double as_jk = std::asin(rho_jk);
  const double as_ks = std::asin(rho_ks);
  const double as_js = std::asin(rho_jk * rho_ks);
  double p0 = 0.5 + as_js / pi;
  double p1 = 0.25 + (-as_jk + as_ks - as_js) / (2.0 * pi);
  double p2 = 0.25 + (as_jk - as_ks - as_js) / (2.0 * pi);
  p0 = clamp_prob(p0, "shared_node_probs");
  p1 = clamp_prob(p1, "shared_node_probs");
  p2 = clamp_prob(p2, "shared_node_probs");
  return CrossoverParams(p0, p1, p2);
}

ChernoffBound chernoff_crossover(const CrossoverParams& params, int n) {
  if (n < 1) throw parameter_error("chernoff_crossover: n must be >= 1");
  const double base = params.p0 + 2.0 * std::sqrt(params.p1 * params.p2);
  const double exponent = -std::log(base);
  return {exponent, std::min(1.0, std::exp(-static_cast<double>(n) * exponent))};
}

double hoeffding_crossover(double theta_e, double theta_e2, int n) {
  if (n < 1) throw parameter_error("hoeffding_crossover: n must be >= 1");
  if (!(theta_e >= 0.0 && theta_e <= 1.0 && theta_e2 >= 0.0 && theta_e2 <= 1.0)) {
    throw parameter_error("hoeffding_crossover: thetas must lie in [0, 1]");
  }
  if (!(theta_e > theta_e2)) {
    throw parameter_error("hoeffding_crossover: requires theta_e > theta_e2");
  }
  const double gap = theta_e - theta_e2;
  return std::exp(-0.5 * n * gap * gap);
}

double rival_gap(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= beta && beta < 1.0)) {
    throw parameter_error("rival_gap: need 0 < alpha <= beta < 1");
  }
  return (std::asin(alpha) - std::asin(alpha * beta)) / std::numbers::pi;
}

double tree_error_bound(int d, int n, double alpha, double beta) {
  if (d < 2) throw parameter_error("tree_error_bound: d must be >= 2");
  if (n < 0) throw parameter_error("tree_error_bound: n must be >= 0");
  const double h = rival_gap(alpha, beta);
  const double value = std::pow(static_cast<double>(d), 3) * std::exp(-0.5 * n * h * h);
  return std::min(1.0, value);
}

double relative_error_bound(double d1, double d2) {
  if (d1 < 0.0 || d2 < 0.0) {
    throw parameter_error("relative_error_bound: distortions must be nonnegative");
  }
  return std::sqrt(d1) + std::sqrt(d2) + std::sqrt(d1 * d2);
}

double estimation_error_bound(int rate, int n, double rho) {
  if (n < 1) throw parameter_error("estimation_error_bound: n must be >= 1");
  if (!(std::abs(rho) <= 1.0)) throw parameter_error("estimation_error_bound: need |rho| <= 1");
  const double d = reconstruction_distortion(Codebook(rate));
  return relative_error_bound(d, d) + std::sqrt((1.0 + rho * rho) / n);
}

BoundReport crossover_report(double rho_strong, double rho_weak, int n) {
  BoundReport report;
  report.params = shared_node_probs(rho_strong, rho_weak);
  const ChernoffBound cb = chernoff_crossover(report.params, n);
  report.chernoff_exponent = cb.exponent;
  report.chernoff_bound = cb.bound;
  report.hoeffding_bound =
      hoeffding_crossover(theta_of_rho(rho_strong), theta_of_rho(rho_weak), n);
  return report;
}

}  // namespace treeggm
