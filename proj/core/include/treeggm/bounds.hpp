#ifndef TREEGGM_BOUNDS_HPP
#define TREEGGM_BOUNDS_HPP

namespace treeggm {

/// Distribution of the per-sample crossover increment T in {0, +1, -1}.
struct CrossoverParams {
  double p0 = 1.0;  ///< Pr(u_j u_k = u_r u_s)
  double p1 = 0.0;  ///< Pr(u_j u_k = -1, u_r u_s = +1)
  double p2 = 0.0;  ///< Pr(u_j u_k = +1, u_r u_s = -1)

  /// Validates each probability in [0,1] and p0+p1+p2 = 1 within 1e-12.
  CrossoverParams(double p0, double p1, double p2);
};

/// Closed-form (p0, p1, p2) for pairs (j,k) and (k,s) sharing node k, with
/// the outer correlation rho_js = rho_jk * rho_ks (k on the path from j to s).
CrossoverParams shared_node_probs(double rho_jk, double rho_ks);

struct ChernoffBound {
  double exponent;  ///< E = -ln(p0 + 2 sqrt(p1 p2)), reported unclamped
  double bound;     ///< min(1, e^{-nE})
};

/// Chernoff bound on the crossover probability Pr(theta_hat_e <= theta_hat_e');
/// the exponent is tight as n -> infinity.
ChernoffBound chernoff_crossover(const CrossoverParams& params, int n);

/// Hoeffding bound e^{-n (theta_e - theta_e')^2 / 2}; requires theta_e > theta_e'.
double hoeffding_crossover(double theta_e, double theta_e2, int n);

/// Worst-case crossover gap h(alpha, beta) = (arcsin(alpha) - arcsin(alpha*beta)) / pi
/// for edge correlations in [alpha, beta]. alpha = beta is admitted (the
/// formula is continuous there, and the star experiment uses equal weights).
double rival_gap(double alpha, double beta);

/// Tree-error bound min(1, d^3 e^{-n h^2(alpha,beta) / 2}).
double tree_error_bound(int d, int n, double alpha, double beta);

/// Relative correlation error bound sqrt(D1) + sqrt(D2) + sqrt(D1 D2) for
/// quantizers with reconstruction errors D1 and D2.
double relative_error_bound(double d1, double d2);

/// Estimation error bound for the rate-R per-symbol quantizer:
/// 2 sqrt(1-sigma_u^2) + (1-sigma_u^2) + sqrt((1+rho^2)/n).
double estimation_error_bound(int rate, int n, double rho);

/// Crossover bounds for a shared-node configuration, as rendered by the CLI.
struct BoundReport {
  CrossoverParams params{1.0, 0.0, 0.0};
  double chernoff_exponent = 0.0;
  double chernoff_bound = 1.0;
  double hoeffding_bound = 1.0;
};

BoundReport crossover_report(double rho_strong, double rho_weak, int n);

}  // namespace treeggm

#endif
