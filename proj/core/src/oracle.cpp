#include "treeggm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "treeggm/errors.hpp"

namespace treeggm {

double exact_crossover(const CrossoverParams& params, int n) {
  if (n < 1 || n > 5000) throw parameter_error("exact_crossover: n must be in [1, 5000]");
  std::vector<double> logfact(n + 1);
  for (int k = 0; k <= n; ++k) logfact[k] = std::lgamma(static_cast<double>(k) + 1.0);

  constexpr double neg_inf = -std::numeric_limits<double>::infinity();
  const double lp0 = params.p0 > 0.0 ? std::log(params.p0) : neg_inf;
  const double lp1 = params.p1 > 0.0 ? std::log(params.p1) : neg_inf;
  const double lp2 = params.p2 > 0.0 ? std::log(params.p2) : neg_inf;

  // Streaming log-sum-exp over counts (n0, n1, n2) with n1 >= n2 (sum T >= 0).
  double max_log = neg_inf;
  double scaled_sum = 0.0;
  for (int n1 = 0; n1 <= n; ++n1) {
    if (n1 > 0 && params.p1 == 0.0) break;
    for (int n2 = 0; n2 <= std::min(n1, n - n1); ++n2) {
      if (n2 > 0 && params.p2 == 0.0) break;
      const int n0 = n - n1 - n2;
      if (n0 > 0 && params.p0 == 0.0) continue;
      double log_term = logfact[n] - logfact[n0] - logfact[n1] - logfact[n2];
      if (n0 > 0) log_term += n0 * lp0;
      if (n1 > 0) log_term += n1 * lp1;
      if (n2 > 0) log_term += n2 * lp2;
      if (log_term <= max_log) {
        scaled_sum += std::exp(log_term - max_log);
      } else {
        scaled_sum = scaled_sum * std::exp(max_log - log_term) + 1.0;
        max_log = log_term;
      }
    }
  }
  if (max_log == neg_inf) return 0.0;
  return std::clamp(std::exp(max_log + std::log(scaled_sum)), 0.0, 1.0);
}

namespace {

// Decodes a Pruefer sequence into canonical sorted edges (scratch reused
// across the enumeration).
void decode_pruefer(const std::vector<int>& seq, int d, std::vector<int>& degree,
                    std::vector<std::pair<int, int>>& edges) {
  degree.assign(d, 1);
  for (int p : seq) ++degree[p];
  edges.clear();
  // Smallest-leaf rule via a linear scan pointer; d <= 8 keeps this cheap.
  std::vector<char> used(d, 0);
  for (int p : seq) {
    int leaf = -1;
    for (int i = 0; i < d; ++i) {
      if (degree[i] == 1 && !used[i]) {
        leaf = i;
        break;
      }
    }
    used[leaf] = 1;
    edges.emplace_back(std::min(leaf, p), std::max(leaf, p));
    --degree[p];
  }
  int a = -1, b = -1;
  for (int i = 0; i < d; ++i) {
    if (degree[i] >= 1 && !used[i]) {
      if (a < 0) {
        a = i;
      } else {
        b = i;
      }
    }
  }
  edges.emplace_back(a, b);
  std::sort(edges.begin(), edges.end());
}

}  // namespace

EstimatedTree brute_mwst(const EdgeWeights& w) {
  const int d = w.dim();
  if (d > 8) throw parameter_error("brute_mwst: d must be <= 8");

  EstimatedTree best;
  best.d = d;
  double best_weight = -std::numeric_limits<double>::infinity();

  if (d == 2) {
    best.edges = {{0, 1}};
    return best;
  }

  std::vector<int> seq(d - 2, 0);
  std::vector<int> degree;
  std::vector<std::pair<int, int>> edges;
  for (;;) {
    decode_pruefer(seq, d, degree, edges);
    double total = 0.0;
    for (auto [u, v] : edges) total += w(u, v);
    if (total > best_weight || (total == best_weight && edges < best.edges)) {
      best_weight = total;
      best.edges = edges;
    }
    // Next sequence in lexicographic order.
    int pos = d - 3;
    while (pos >= 0 && seq[pos] == d - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return best;
}

namespace {

// Adaptive Simpson on [a, b] to absolute tolerance tol.
template <typename F>
double simpson_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                    double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, fa, b, fb, m, fm, whole, tol, 40);
}

}  // namespace

double numeric_orthant_check(double rho) {
  if (!(std::abs(rho) < 1.0)) throw parameter_error("numeric_orthant_check: need |rho| < 1");
  const double det = 1.0 - rho * rho;
  const double norm = 1.0 / (2.0 * std::numbers::pi * std::sqrt(det));
  auto density = [&](double x, double y) {
    return norm * std::exp(-(x * x - 2.0 * rho * x * y + y * y) / (2.0 * det));
  };
  // Mass outside [0, 9]^2 is far below the 1e-8 target.
  constexpr double kLimit = 9.0;
  auto inner = [&](double x) {
    return adaptive_simpson([&](double y) { return density(x, y); }, 0.0, kLimit, 1e-12);
  };
  return adaptive_simpson(inner, 0.0, kLimit, 1e-10);
}

}  // namespace treeggm
