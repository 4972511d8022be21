#ifndef TREEGGM_PROTOCOL_HPP
#define TREEGGM_PROTOCOL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeggm/chowliu.hpp"
#include "treeggm/sampling.hpp"

namespace treeggm {

enum class Scheme { sign, persym };

std::string scheme_label(Scheme scheme, int rate);

/// One-shot protocol configuration: every machine applies the same rate-R
/// encoder to its first m samples, where m = floor(budget_bits / R) when a
/// per-machine bit budget is set and m = n otherwise.
struct ProtocolConfig {
  Scheme scheme = Scheme::sign;
  int rate = 1;  ///< bits per sample; must be 1 for the sign scheme
  std::optional<long long> budget_bits;  ///< total bits per machine (K)
};

/// Exact communication accounting: total_bits = d * m * R.
struct CommReport {
  std::string scheme;
  int rate = 0;
  int n = 0;  ///< samples available per machine
  int m = 0;  ///< samples transmitted per machine
  int machines = 0;
  long long bits_per_machine = 0;
  long long total_bits = 0;

  /// CSV row "scheme,R,n,m,d,bits_per_machine,total_bits".
  std::string csv_row() const;
  static std::string csv_header();
};

struct ProtocolResult {
  EstimatedTree tree;
  CommReport report;
};

/// Runs the one-shot protocol: each machine encodes its own shard
/// independently, the central machine decodes and recovers the tree with the
/// pipeline matching the scheme.
ProtocolResult run_protocol(const ShardSet& shards, const ProtocolConfig& cfg);

struct BudgetPoint {
  int rate = 0;
  int samples_used = 0;
  double mean_err_est = 0.0;  ///< mean |rho - rho_bar_q| over trials
};

/// Quality-versus-quantity sweep for a fixed per-machine budget of K bits:
/// for each rate R, m = floor(K/R) fresh samples of a correlation-rho pair
/// are quantized and the estimation error is averaged over trials.
std::vector<BudgetPoint> budget_sweep(double rho, int n, long long budget_bits,
                                      const std::vector<int>& rates, int trials,
                                      std::uint64_t seed);

}  // namespace treeggm

#endif
