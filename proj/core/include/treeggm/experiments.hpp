#ifndef TREEGGM_EXPERIMENTS_HPP
#define TREEGGM_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "treeggm/covariance.hpp"
#include "treeggm/tree.hpp"

namespace treeggm {

/// One structure-recovery pipeline in a sweep: the centralized baseline on
/// raw data, the 1-bit sign method, or rate-R per-symbol quantization.
struct MethodSpec {
  enum class Kind { raw, sign, persym };
  Kind kind = Kind::raw;
  int rate = 0;  ///< meaningful for persym only

  std::string label() const;
};

struct SweepRow {
  std::string method;
  int rate = 0;
  int n = 0;
  double error_rate = 0.0;  ///< fraction of trials with an exact edge-set mismatch
  int trials = 0;
};

/// Tree-recovery error versus sample size for each method. Every trial draws
/// one sample matrix from the tree's GGM and feeds the same draws to all
/// methods, so method columns are paired.
std::vector<SweepRow> sweep_error_vs_n(const WeightedTree& truth,
                                       const std::vector<MethodSpec>& methods,
                                       const std::vector<int>& n_list, int trials,
                                       std::uint64_t seed);

struct CrossoverRow {
  int n = 0;
  double empirical_p = 0.0;
  double exact_p = 0.0;
  double chernoff = 0.0;
  double hoeffding = 0.0;
  double exact_exponent = 0.0;     ///< -(1/n) ln(exact_p)
  double chernoff_exponent = 0.0;  ///< E
};

/// Crossover probability for the two edges of a 3-node chain with weights
/// rho_strong and rho_weak: Monte Carlo estimate, exact multinomial value,
/// and both analytic bounds. Requires rho_strong > rho_weak > 0.
std::vector<CrossoverRow> crossover_experiment(double rho_strong, double rho_weak,
                                               const std::vector<int>& n_list, int trials,
                                               std::uint64_t seed);

struct StarBoundRow {
  int n = 0;
  double empirical_error = 0.0;
  double bound = 0.0;  ///< d^3 e^{-n h^2 / 2} with alpha = beta = rho
};

/// Sign-method tree error on a star versus the closed-form bound.
std::vector<StarBoundRow> star_bound_experiment(int d, double rho, const std::vector<int>& n_list,
                                                int trials, std::uint64_t seed);

struct RelErrRow {
  int rate = 0;
  double err_rel = 0.0;         ///< mean |rho_bar - rho_bar_q|
  double bound = 0.0;           ///< 2 sqrt(D) + D with D the reconstruction error
  double err_exponent = 0.0;    ///< -(1/R) ln(err_rel)
  double bound_exponent = 0.0;  ///< -(1/R) ln(bound)
};

/// Relative correlation error of per-symbol quantization versus its bound.
std::vector<RelErrRow> rel_err_experiment(const std::vector<int>& rates, double rho, int n,
                                          int trials, std::uint64_t seed);

}  // namespace treeggm

#endif
