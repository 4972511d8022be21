#include "treeggm/protocol.hpp"

#include <cmath>
#include <cstdio>

#include "treeggm/errors.hpp"
#include "treeggm/estimators.hpp"
#include "treeggm/parallel.hpp"
#include "treeggm/rng.hpp"

namespace treeggm {

std::string scheme_label(Scheme scheme, int rate) {
  if (scheme == Scheme::sign) return "sign";
  return "persym" + std::to_string(rate);
}

std::string CommReport::csv_header() { return "scheme,R,n,m,d,bits_per_machine,total_bits"; }

std::string CommReport::csv_row() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s,%d,%d,%d,%d,%lld,%lld", scheme.c_str(), rate, n, m, machines,
                bits_per_machine, total_bits);
  return buf;
}

namespace {

int transmitted_samples(int n, int rate, const std::optional<long long>& budget) {
  if (!budget) return n;
  const int m = static_cast<int>(std::min<long long>(*budget / rate, n));
  if (m < 1) throw parameter_error("protocol: budget is smaller than one sample's rate");
  return m;
}

Shard head(const Shard& s, int m) {
  Shard out;
  out.machine = s.machine;
  out.values.assign(s.values.begin(), s.values.begin() + m);
  return out;
}

}  // namespace

ProtocolResult run_protocol(const ShardSet& shards, const ProtocolConfig& cfg) {
  if (shards.d() < 2) throw parameter_error("run_protocol: need at least 2 machines");
  if (cfg.rate < 1 || cfg.rate > 16) throw parameter_error("run_protocol: rate must be in [1, 16]");
  if (cfg.scheme == Scheme::sign && cfg.rate != 1) {
    throw parameter_error("run_protocol: sign scheme is 1 bit per sample");
  }
  const int n = shards.n();
  if (n < 1) throw parameter_error("run_protocol: empty shards");
  const int m = transmitted_samples(n, cfg.rate, cfg.budget_bits);

  // Encoding stage: each machine sees only its own shard (first m samples)
  // and the shared encoder configuration.
  std::vector<QuantizedShard> messages;
  messages.reserve(shards.d());
  Codebook cb(cfg.rate);
  for (const Shard& s : shards.shards) {
    const Shard prefix = head(s, m);
    messages.push_back(cfg.scheme == Scheme::sign ? sign_encode(prefix)
                                                  : persym_encode(prefix, cb));
  }

  // Central decoder.
  ProtocolResult result;
  if (cfg.scheme == Scheme::sign) {
    result.tree = kruskal_mwst(weights_from_signs(messages));
  } else {
    result.tree = kruskal_mwst(weights_from_persym(messages, cb));
  }
  result.report.scheme = scheme_label(cfg.scheme, cfg.rate);
  result.report.rate = cfg.rate;
  result.report.n = n;
  result.report.m = m;
  result.report.machines = shards.d();
  result.report.bits_per_machine = static_cast<long long>(m) * cfg.rate;
  result.report.total_bits = result.report.bits_per_machine * shards.d();
  return result;
}

std::vector<BudgetPoint> budget_sweep(double rho, int n, long long budget_bits,
                                      const std::vector<int>& rates, int trials,
                                      std::uint64_t seed) {
  if (rates.empty()) throw parameter_error("budget_sweep: rate list is empty");
  if (n < 1 || trials < 1) throw parameter_error("budget_sweep: need n >= 1 and trials >= 1");
  if (!(std::abs(rho) < 1.0)) throw parameter_error("budget_sweep: need |rho| < 1");
  for (int r : rates) {
    if (r < 1 || r > 16) throw parameter_error("budget_sweep: rate must be in [1, 16]");
    if (budget_bits < r) throw parameter_error("budget_sweep: budget below one sample's rate");
  }

  std::vector<Codebook> codebooks;
  codebooks.reserve(rates.size());
  for (int r : rates) codebooks.emplace_back(r);

  // err[t][k]: estimation error of rate k in trial t; reduced sequentially so
  // the result is identical for any worker count.
  std::vector<std::vector<double>> err(trials, std::vector<double>(rates.size(), 0.0));
  const double cross = std::sqrt(1.0 - rho * rho);
  parallel_for(0, trials, [&](int t) {
    auto rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Shard x{0, {}}, y{1, {}};
    x.values.resize(n);
    y.values.resize(n);
    for (int i = 0; i < n; ++i) {
      const double z0 = gauss(rng);
      const double z1 = gauss(rng);
      x.values[i] = z0;
      y.values[i] = rho * z0 + cross * z1;
    }
    for (std::size_t k = 0; k < rates.size(); ++k) {
      const int m = static_cast<int>(std::min<long long>(budget_bits / rates[k], n));
      const Shard xm = head(x, m);
      const Shard ym = head(y, m);
      const auto u = decode(persym_encode(xm, codebooks[k]), codebooks[k]);
      const auto v = decode(persym_encode(ym, codebooks[k]), codebooks[k]);
      err[t][k] = std::abs(rho - sample_corr(u, v));
    }
  });

  std::vector<BudgetPoint> out(rates.size());
  for (std::size_t k = 0; k < rates.size(); ++k) {
    out[k].rate = rates[k];
    out[k].samples_used = static_cast<int>(std::min<long long>(budget_bits / rates[k], n));
    double sum = 0.0;
    for (int t = 0; t < trials; ++t) sum += err[t][k];
    out[k].mean_err_est = sum / trials;
  }
  return out;
}

}  // namespace treeggm
