#ifndef TREEGGM_ORACLE_HPP
#define TREEGGM_ORACLE_HPP

#include "treeggm/bounds.hpp"
#include "treeggm/chowliu.hpp"

namespace treeggm {

/// Exact crossover probability Pr(sum T_i >= 0) by multinomial summation in
/// log space (ties count as crossovers, matching the <= in the event). O(n^2)
/// terms; n is capped at 5000.
double exact_crossover(const CrossoverParams& params, int n);

/// Exhaustive MWST over all d^(d-2) labeled trees (d <= 8). Ties are resolved
/// by the lexicographically smallest sorted edge list, matching Kruskal.
EstimatedTree brute_mwst(const EdgeWeights& w);

/// Pr(x > 0, y > 0) for a standard bivariate normal with correlation rho, by
/// nested adaptive quadrature of the density over the positive quadrant,
/// accurate to 1e-8. Independent reference for theta/2.
double numeric_orthant_check(double rho);

}  // namespace treeggm

#endif
