#include "treeggm/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "treeggm/bounds.hpp"
#include "treeggm/chowliu.hpp"
#include "treeggm/errors.hpp"
#include "treeggm/estimators.hpp"
#include "treeggm/oracle.hpp"
#include "treeggm/parallel.hpp"
#include "treeggm/quantizer.hpp"
#include "treeggm/rng.hpp"
#include "treeggm/sampling.hpp"

namespace treeggm {

std::string MethodSpec::label() const {
  switch (kind) {
    case Kind::raw:
      return "raw";
    case Kind::sign:
      return "sign";
    case Kind::persym:
      return "persym" + std::to_string(rate);
  }
  return "?";
}

std::vector<SweepRow> sweep_error_vs_n(const WeightedTree& truth,
                                       const std::vector<MethodSpec>& methods,
                                       const std::vector<int>& n_list, int trials,
                                       std::uint64_t seed) {
  if (methods.empty()) throw parameter_error("sweep_error_vs_n: no methods");
  if (n_list.empty()) throw parameter_error("sweep_error_vs_n: empty n grid");
  if (trials < 1) throw parameter_error("sweep_error_vs_n: trials must be >= 1");

  const Covariance cov = covariance_from_tree(truth);
  const auto true_edges = truth.edge_set();
  std::vector<Codebook> codebooks;
  for (const auto& m : methods) {
    if (m.kind == MethodSpec::Kind::persym) codebooks.emplace_back(m.rate);
  }

  std::vector<SweepRow> rows;
  for (int n : n_list) {
    // fails[t][k]: method k failed in trial t.
    std::vector<std::vector<char>> fails(trials, std::vector<char>(methods.size(), 0));
    parallel_for(0, trials, [&](int t) {
      const SampleMatrix samples = sample_gaussian(
          cov, n, derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)));
      const ShardSet shards = shard(samples);
      std::vector<QuantizedShard> signs;
      std::size_t cb_index = 0;
      for (std::size_t k = 0; k < methods.size(); ++k) {
        EstimatedTree est;
        switch (methods[k].kind) {
          case MethodSpec::Kind::raw:
            est = kruskal_mwst(weights_from_raw(shards));
            break;
          case MethodSpec::Kind::sign: {
            if (signs.empty()) {
              for (const auto& s : shards.shards) signs.push_back(sign_encode(s));
            }
            est = kruskal_mwst(weights_from_signs(signs));
            break;
          }
          case MethodSpec::Kind::persym: {
            const Codebook& cb = codebooks[cb_index++];
            std::vector<QuantizedShard> enc;
            enc.reserve(shards.d());
            for (const auto& s : shards.shards) enc.push_back(persym_encode(s, cb));
            est = kruskal_mwst(weights_from_persym(enc, cb));
            break;
          }
        }
        fails[t][k] = est.edges != true_edges;
      }
    });
    for (std::size_t k = 0; k < methods.size(); ++k) {
      int failed = 0;
      for (int t = 0; t < trials; ++t) failed += fails[t][k];
      rows.push_back({methods[k].label(), methods[k].rate, n,
                      static_cast<double>(failed) / trials, trials});
    }
  }
  return rows;
}

std::vector<CrossoverRow> crossover_experiment(double rho_strong, double rho_weak,
                                               const std::vector<int>& n_list, int trials,
                                               std::uint64_t seed) {
  if (!(rho_strong > rho_weak && rho_weak > 0.0 && rho_strong < 1.0)) {
    throw parameter_error("crossover_experiment: need 0 < rho_weak < rho_strong < 1");
  }
  if (trials < 1) throw parameter_error("crossover_experiment: trials must be >= 1");
  const CrossoverParams params = shared_node_probs(rho_strong, rho_weak);
  const double theta_e = theta_of_rho(rho_strong);
  const double theta_e2 = theta_of_rho(rho_weak);
  const double cross_s = std::sqrt(1.0 - rho_strong * rho_strong);
  const double cross_w = std::sqrt(1.0 - rho_weak * rho_weak);

  std::vector<CrossoverRow> rows;
  for (int n : n_list) {
    std::vector<char> crossed(trials, 0);
    parallel_for(0, trials, [&](int t) {
      auto rng = make_rng(
          derive_seed(seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)));
      std::normal_distribution<double> gauss(0.0, 1.0);
      int agree_e = 0;
      int agree_e2 = 0;
      for (int i = 0; i < n; ++i) {
        const double xk = gauss(rng);
        const double xj = rho_strong * xk + cross_s * gauss(rng);
        const double xs = rho_weak * xk + cross_w * gauss(rng);
        agree_e += (xj < 0.0) == (xk < 0.0);
        agree_e2 += (xk < 0.0) == (xs < 0.0);
      }
      crossed[t] = agree_e <= agree_e2;
    });
    CrossoverRow row;
    row.n = n;
    int count = 0;
    for (char c : crossed) count += c;
    row.empirical_p = static_cast<double>(count) / trials;
    row.exact_p = exact_crossover(params, n);
    const ChernoffBound cb = chernoff_crossover(params, n);
    row.chernoff = cb.bound;
    row.chernoff_exponent = cb.exponent;
    row.hoeffding = hoeffding_crossover(theta_e, theta_e2, n);
    row.exact_exponent = -std::log(row.exact_p) / n;
    rows.push_back(row);
  }
  return rows;
}

std::vector<StarBoundRow> star_bound_experiment(int d, double rho,
                                                const std::vector<int>& n_list, int trials,
                                                std::uint64_t seed) {
  const WeightedTree truth = star_tree(d, rho);
  const std::vector<MethodSpec> methods = {{MethodSpec::Kind::sign, 0}};
  const auto rows = sweep_error_vs_n(truth, methods, n_list, trials, seed);
  std::vector<StarBoundRow> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    out.push_back({r.n, r.error_rate, tree_error_bound(d, r.n, rho, rho)});
  }
  return out;
}

std::vector<RelErrRow> rel_err_experiment(const std::vector<int>& rates, double rho, int n,
                                          int trials, std::uint64_t seed) {
  if (rates.empty()) throw parameter_error("rel_err_experiment: empty rate list");
  if (!(std::abs(rho) < 1.0)) throw parameter_error("rel_err_experiment: need |rho| < 1");
  if (n < 1 || trials < 1) throw parameter_error("rel_err_experiment: need n, trials >= 1");
  std::vector<Codebook> codebooks;
  codebooks.reserve(rates.size());
  for (int r : rates) codebooks.emplace_back(r);
  const double cross = std::sqrt(1.0 - rho * rho);

  std::vector<std::vector<double>> gap(trials, std::vector<double>(rates.size(), 0.0));
  parallel_for(0, trials, [&](int t) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Shard x{0, std::vector<double>(n)};
    Shard y{1, std::vector<double>(n)};
    for (int i = 0; i < n; ++i) {
      const double z0 = gauss(rng);
      x.values[i] = z0;
      y.values[i] = rho * z0 + cross * gauss(rng);
    }
    const double rho_bar = sample_corr(x.values, y.values);
    for (std::size_t k = 0; k < rates.size(); ++k) {
      const auto u = decode(persym_encode(x, codebooks[k]), codebooks[k]);
      const auto v = decode(persym_encode(y, codebooks[k]), codebooks[k]);
      gap[t][k] = std::abs(rho_bar - sample_corr(u, v));
    }
  });

  std::vector<RelErrRow> rows(rates.size());
  for (std::size_t k = 0; k < rates.size(); ++k) {
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) sum += gap[t][k];
    RelErrRow& row = rows[k];
    row.rate = rates[k];
    row.err_rel = sum / trials;
    const double d = reconstruction_distortion(codebooks[k]);
    row.bound = relative_error_bound(d, d);
    row.err_exponent = -std::log(row.err_rel) / rates[k];
    row.bound_exponent = -std::log(row.bound) / rates[k];
  }
  return rows;
}

}  // namespace treeggm
