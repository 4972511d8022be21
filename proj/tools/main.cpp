#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "csv.hpp"
#include "ingest.hpp"
#include "treeggm/bounds.hpp"
#include "treeggm/chowliu.hpp"
#include "treeggm/covariance.hpp"
#include "treeggm/errors.hpp"
#include "treeggm/estimators.hpp"
#include "treeggm/experiments.hpp"
#include "treeggm/oracle.hpp"
#include "treeggm/protocol.hpp"
#include "treeggm/quantizer.hpp"
#include "treeggm/sampling.hpp"
#include "treeggm/tree.hpp"

namespace {

using namespace treeggm;
using treeggm::cli::fmt_g;
using treeggm::cli::OutputSink;

std::string join_invocation(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

// Full runs use 1000 trials; --fast switches unset knobs to a quick profile
// for smoke runs.
int resolved_trials(const CLI::Option* opt, int value, bool fast) {
  if (opt->count() > 0) return value;
  return fast ? 100 : 1000;
}

std::vector<int> resolved_grid(const CLI::Option* opt, std::vector<int> value, bool fast,
                               std::vector<int> full, std::vector<int> quick) {
  if (opt->count() > 0) return value;
  return fast ? quick : full;
}

WeightedTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open tree file: " + path);
  return read_tree(in);
}

EstimatedTree load_edge_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open reference file: " + path);
  return read_edge_set(in);
}

std::vector<MethodSpec> make_methods(const std::vector<int>& rates) {
  std::vector<MethodSpec> methods{{MethodSpec::Kind::raw, 0}, {MethodSpec::Kind::sign, 0}};
  for (int r : rates) methods.push_back({MethodSpec::Kind::persym, r});
  return methods;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string invocation = join_invocation(argc, argv);

  CLI::App app{"treeggm: structure learning of tree GGMs under communication constraints"};
  app.require_subcommand(1);

  bool fast = false;
  app.add_flag("--fast", fast, "quick profile: trials=100 and reduced default grids");

  // ---------------------------------------------------------------- gen-tree
  struct {
    int d = 20;
    double lo = 0.1, hi = 0.9;
    bool star = false;
    double rho = 0.5;
    std::uint64_t seed = 1;
    std::string out = "-";
  } gt;
  auto* gen = app.add_subcommand("gen-tree", "Generate a weighted tree edge-list file");
  gen->add_option("--d", gt.d, "node count");
  gen->add_option("--weight-low", gt.lo, "minimum edge weight");
  gen->add_option("--weight-high", gt.hi, "maximum edge weight");
  gen->add_flag("--star", gt.star, "star topology with hub 0 instead of a random tree");
  gen->add_option("--rho", gt.rho, "edge weight for --star");
  gen->add_option("--seed", gt.seed, "RNG seed");
  gen->add_option("--out", gt.out, "output file ('-' for stdout)");
  gen->callback([&] {
    const WeightedTree tree =
        gt.star ? star_tree(gt.d, gt.rho) : random_tree(gt.d, gt.lo, gt.hi, gt.seed);
    OutputSink sink(gt.out, invocation);
    write_tree(tree, sink.stream());
    sink.stamp();
  });

  // ------------------------------------------------------------------- sweep
  struct {
    std::string tree_file;
    int d = 20;
    double lo = 0.1, hi = 0.9;
    std::vector<int> n_list;
    std::vector<int> rates{1, 4};
    int trials = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
  } sw;
  auto* sweep = app.add_subcommand(
      "sweep", "Tree-recovery error vs n for raw, sign, and per-symbol methods");
  sweep->add_option("--tree", sw.tree_file, "tree edge-list file (else a random tree is drawn)");
  sweep->add_option("--d", sw.d, "node count for the random tree");
  sweep->add_option("--weight-low", sw.lo, "random tree weight range low");
  sweep->add_option("--weight-high", sw.hi, "random tree weight range high");
  auto* sweep_n = sweep->add_option("--n", sw.n_list, "sample sizes")->delimiter(',');
  sweep->add_option("--R", sw.rates, "per-symbol rates (bits)")->delimiter(',');
  auto* sweep_trials = sweep->add_option("--trials", sw.trials, "Monte Carlo trials per n");
  sweep->add_option("--seed", sw.seed, "RNG seed");
  sweep->add_option("--out", sw.out, "output CSV ('-' for stdout)");
  sweep->callback([&] {
    const WeightedTree tree = sw.tree_file.empty()
                                  ? random_tree(sw.d, sw.lo, sw.hi, sw.seed)
                                  : load_tree(sw.tree_file);
    const auto n_list =
        resolved_grid(sweep_n, sw.n_list, fast, {500, 1000, 2000, 4000}, {200, 500, 1000});
    const int trials = resolved_trials(sweep_trials, sw.trials, fast);
    const auto rows = sweep_error_vs_n(tree, make_methods(sw.rates), n_list, trials, sw.seed);
    OutputSink sink(sw.out, invocation);
    sink.line("method,R,n,error_rate,trials");
    for (const auto& r : rows) {
      sink.line(r.method + "," + std::to_string(r.rate) + "," + std::to_string(r.n) + "," +
                fmt_g(r.error_rate) + "," + std::to_string(r.trials));
    }
    sink.stamp();
  });

  // --------------------------------------------------------------- crossover
  struct {
    double rho1 = 0.9, rho2 = 0.1;
    std::vector<int> n_list;
    int trials = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
  } co;
  auto* crossover = app.add_subcommand(
      "crossover", "Crossover probability of two chain edges: empirical, exact, and bounds");
  crossover->add_option("--rho1", co.rho1, "strong edge correlation");
  crossover->add_option("--rho2", co.rho2, "weak edge correlation");
  auto* co_n = crossover->add_option("--n", co.n_list, "sample sizes")->delimiter(',');
  auto* co_trials = crossover->add_option("--trials", co.trials, "Monte Carlo trials per n");
  crossover->add_option("--seed", co.seed, "RNG seed");
  crossover->add_option("--out", co.out, "output CSV ('-' for stdout)");
  crossover->callback([&] {
    const auto n_list = resolved_grid(co_n, co.n_list, fast, {10, 50, 100, 200, 500, 1000, 2000},
                                      {10, 50, 100, 200});
    const int trials = resolved_trials(co_trials, co.trials, fast);
    const auto rows = crossover_experiment(co.rho1, co.rho2, n_list, trials, co.seed);
    OutputSink sink(co.out, invocation);
    sink.line("n,empirical_p,exact_p,chernoff,hoeffding,exact_exponent,chernoff_exponent");
    for (const auto& r : rows) {
      sink.line(std::to_string(r.n) + "," + fmt_g(r.empirical_p) + "," + fmt_g(r.exact_p) + "," +
                fmt_g(r.chernoff) + "," + fmt_g(r.hoeffding) + "," + fmt_g(r.exact_exponent) +
                "," + fmt_g(r.chernoff_exponent));
    }
    sink.stamp();
  });

  // -------------------------------------------------------------- star-bound
  struct {
    int d = 20;
    double rho = 0.5;
    std::vector<int> n_list;
    int trials = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
  } sb;
  auto* star_bound = app.add_subcommand(
      "star-bound", "Sign-method tree error on a star vs the closed-form bound");
  star_bound->add_option("--d", sb.d, "node count");
  star_bound->add_option("--rho", sb.rho, "edge correlation");
  auto* sb_n = star_bound->add_option("--n", sb.n_list, "sample sizes")->delimiter(',');
  auto* sb_trials = star_bound->add_option("--trials", sb.trials, "Monte Carlo trials per n");
  star_bound->add_option("--seed", sb.seed, "RNG seed");
  star_bound->add_option("--out", sb.out, "output CSV ('-' for stdout)");
  star_bound->callback([&] {
    const auto n_list =
        resolved_grid(sb_n, sb.n_list, fast, {500, 1000, 2000, 4000}, {200, 500, 1000});
    const int trials = resolved_trials(sb_trials, sb.trials, fast);
    const auto rows = star_bound_experiment(sb.d, sb.rho, n_list, trials, sb.seed);
    OutputSink sink(sb.out, invocation);
    sink.line("n,empirical_tree_error,bound");
    for (const auto& r : rows) {
      sink.line(std::to_string(r.n) + "," + fmt_g(r.empirical_error) + "," + fmt_g(r.bound));
    }
    sink.stamp();
  });

  // ----------------------------------------------------------------- rel-err
  struct {
    std::vector<int> rates{1, 2, 3, 4, 5, 6, 7, 8};
    double rho = 0.5;
    int n = 1000;
    int trials = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
  } re;
  auto* rel_err = app.add_subcommand(
      "rel-err", "Relative correlation error of per-symbol quantization vs its bound");
  rel_err->add_option("--R", re.rates, "rates (bits)")->delimiter(',');
  rel_err->add_option("--rho", re.rho, "pair correlation");
  rel_err->add_option("--n", re.n, "samples per run");
  auto* re_trials = rel_err->add_option("--trials", re.trials, "Monte Carlo runs");
  rel_err->add_option("--seed", re.seed, "RNG seed");
  rel_err->add_option("--out", re.out, "output CSV ('-' for stdout)");
  rel_err->callback([&] {
    const int trials = resolved_trials(re_trials, re.trials, fast);
    const auto rows = rel_err_experiment(re.rates, re.rho, re.n, trials, re.seed);
    OutputSink sink(re.out, invocation);
    sink.line("R,empirical_err_rel,bound,empirical_exponent,bound_exponent");
    for (const auto& r : rows) {
      sink.line(std::to_string(r.rate) + "," + fmt_g(r.err_rel) + "," + fmt_g(r.bound) + "," +
                fmt_g(r.err_exponent) + "," + fmt_g(r.bound_exponent));
    }
    sink.stamp();
  });

  // ------------------------------------------------------------------ budget
  struct {
    long long budget = 1000;
    int n = 1000;
    double rho = 0.5;
    std::vector<int> rates{1, 2, 3, 4, 5, 6, 7, 8};
    int trials = 0;
    std::uint64_t seed = 1;
    std::string out = "-";
  } bu;
  auto* budget = app.add_subcommand(
      "budget", "Quality-vs-quantity sweep under a fixed per-machine bit budget");
  budget->add_option("--budget-bits", bu.budget, "total bits per machine (K)");
  budget->add_option("--n", bu.n, "local samples per machine");
  budget->add_option("--rho", bu.rho, "pair correlation");
  budget->add_option("--R", bu.rates, "rates (bits)")->delimiter(',');
  auto* bu_trials = budget->add_option("--trials", bu.trials, "Monte Carlo trials");
  budget->add_option("--seed", bu.seed, "RNG seed");
  budget->add_option("--out", bu.out, "output CSV ('-' for stdout)");
  budget->callback([&] {
    const int trials = resolved_trials(bu_trials, bu.trials, fast);
    const auto table = budget_sweep(bu.rho, bu.n, bu.budget, bu.rates, trials, bu.seed);
    OutputSink sink(bu.out, invocation);
    sink.line("R,m,err_est,bound");
    for (const auto& p : table) {
      sink.line(std::to_string(p.rate) + "," + std::to_string(p.samples_used) + "," +
                fmt_g(p.mean_err_est) + "," +
                fmt_g(estimation_error_bound(p.rate, p.samples_used, bu.rho)));
    }
    sink.stamp();
  });

  // ---------------------------------------------------------------- skeleton
  struct {
    std::string data_file;
    std::string dims;
    std::vector<std::string> methods{"raw", "sign"};
    std::vector<int> rates;
    std::string ref_file;
    std::string out = "-";
  } sk;
  auto* skeleton = app.add_subcommand(
      "skeleton", "Recover a tree from a CSV dataset and compare to a reference edge list");
  skeleton->add_option("--data", sk.data_file, "CSV with one row per sample")->required();
  skeleton->add_option("--dims", sk.dims,
                       "coordinate selector x|y|z for files with 3 columns per joint");
  skeleton->add_option("--methods", sk.methods, "pipelines to run (raw, sign)")->delimiter(',');
  skeleton->add_option("--R", sk.rates, "additional per-symbol rates to run")->delimiter(',');
  skeleton->add_option("--ref", sk.ref_file, "reference tree edge-list file");
  skeleton->add_option("--out", sk.out, "output report ('-' for stdout)");
  skeleton->callback([&] {
    SampleMatrix data = treeggm::cli::read_numeric_csv_file(sk.data_file);
    if (!sk.dims.empty()) {
      if (sk.dims.size() != 1) throw parameter_error("--dims takes a single letter x|y|z");
      data = treeggm::cli::select_dimension(data, sk.dims[0]);
    }
    if (data.d() < 2) throw data_error("skeleton: need at least 2 selected columns");
    treeggm::cli::standardize_columns(data);
    const ShardSet shards = shard(data);

    std::vector<MethodSpec> methods;
    for (const auto& m : sk.methods) {
      if (m == "raw") {
        methods.push_back({MethodSpec::Kind::raw, 0});
      } else if (m == "sign") {
        methods.push_back({MethodSpec::Kind::sign, 0});
      } else {
        throw parameter_error("unknown method '" + m + "' (expected raw or sign)");
      }
    }
    for (int r : sk.rates) methods.push_back({MethodSpec::Kind::persym, r});
    if (methods.empty()) throw parameter_error("skeleton: no methods selected");

    std::optional<EstimatedTree> reference;
    if (!sk.ref_file.empty()) {
      reference = load_edge_set(sk.ref_file);
      if (reference->d != data.d()) {
        throw data_error("reference tree has " + std::to_string(reference->d) +
                         " nodes but the data has " + std::to_string(data.d()) + " columns");
      }
    }

    // Validate every rate before any pipeline runs so a bad configuration
    // cannot leave a half-written report.
    for (const auto& m : methods) {
      if (m.kind == MethodSpec::Kind::persym) Codebook{m.rate};
    }

    std::ostringstream body;
    for (const auto& m : methods) {
      EstimatedTree est;
      switch (m.kind) {
        case MethodSpec::Kind::raw:
          est = kruskal_mwst(weights_from_raw(shards));
          break;
        case MethodSpec::Kind::sign: {
          std::vector<QuantizedShard> enc;
          for (const auto& s : shards.shards) enc.push_back(sign_encode(s));
          est = kruskal_mwst(weights_from_signs(enc));
          break;
        }
        case MethodSpec::Kind::persym: {
          const Codebook cb(m.rate);
          std::vector<QuantizedShard> enc;
          for (const auto& s : shards.shards) enc.push_back(persym_encode(s, cb));
          est = kruskal_mwst(weights_from_persym(enc, cb));
          break;
        }
      }
      body << "method=" << m.label() << "\n";
      write_tree(est, body);
      if (reference) {
        std::set<std::pair<int, int>> ref_edges(reference->edges.begin(),
                                                reference->edges.end());
        int hits = 0;
        for (const auto& e : est.edges) hits += ref_edges.count(e) > 0;
        const int disagreements = static_cast<int>(est.edges.size()) - hits;
        const double f1 =
            2.0 * hits / static_cast<double>(est.edges.size() + reference->edges.size());
        body << "disagreements=" << disagreements << "\n";
        body << "edge_f1=" << fmt_g(f1) << "\n";
      }
      body << "\n";
    }
    OutputSink sink(sk.out, invocation);
    sink.stream() << body.str();
    sink.stamp();
  });

  // ------------------------------------------------------------------ bounds
  struct {
    double rho1 = 0.0, rho2 = 0.0;
    double alpha = 0.0, beta = 0.0;
    int d = 0;
    int n = 0;
    int rate = 0;
    double rho = 2.0;  // sentinel: unset
    std::string out = "-";
  } bd;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Evaluate the analytic bounds for a given configuration (name,value CSV)");
  auto* bd_rho1 = bounds_cmd->add_option("--rho1", bd.rho1, "strong correlation (crossover)");
  bounds_cmd->add_option("--rho2", bd.rho2, "weak correlation (crossover)");
  auto* bd_alpha = bounds_cmd->add_option("--alpha", bd.alpha, "minimum edge correlation");
  auto* bd_beta = bounds_cmd->add_option("--beta", bd.beta, "maximum edge correlation");
  auto* bd_d = bounds_cmd->add_option("--d", bd.d, "node count (tree error bound)");
  auto* bd_n = bounds_cmd->add_option("--n", bd.n, "sample count");
  auto* bd_rate = bounds_cmd->add_option("--R", bd.rate, "per-symbol rate");
  auto* bd_rho = bounds_cmd->add_option("--rho", bd.rho, "pair correlation (estimation bound)");
  bounds_cmd->add_option("--out", bd.out, "output CSV ('-' for stdout)");
  bounds_cmd->callback([&] {
    OutputSink sink(bd.out, invocation);
    sink.line("name,value");
    bool wrote = false;
    if (bd_rho1->count() > 0) {
      if (bd_n->count() == 0) throw parameter_error("bounds: crossover bounds need --n");
      const BoundReport r = crossover_report(bd.rho1, bd.rho2, bd.n);
      sink.line("p0," + fmt_g(r.params.p0));
      sink.line("p1," + fmt_g(r.params.p1));
      sink.line("p2," + fmt_g(r.params.p2));
      sink.line("chernoff_exponent," + fmt_g(r.chernoff_exponent));
      sink.line("chernoff_bound," + fmt_g(r.chernoff_bound));
      sink.line("hoeffding_bound," + fmt_g(r.hoeffding_bound));
      sink.line("exact_crossover," + fmt_g(exact_crossover(r.params, bd.n)));
      wrote = true;
    }
    if (bd_alpha->count() > 0 && bd_beta->count() > 0) {
      sink.line("rival_gap," + fmt_g(rival_gap(bd.alpha, bd.beta)));
      if (bd_d->count() > 0 && bd_n->count() > 0) {
        sink.line("tree_error_bound," + fmt_g(tree_error_bound(bd.d, bd.n, bd.alpha, bd.beta)));
      }
      wrote = true;
    }
    if (bd_rate->count() > 0) {
      const Codebook cb(bd.rate);
      const double dist = reconstruction_distortion(cb);
      sink.line("sigma_u_sq," + fmt_g(cb.sigma_u_sq()));
      sink.line("reconstruction_distortion," + fmt_g(dist));
      sink.line("relative_error_bound," + fmt_g(relative_error_bound(dist, dist)));
      if (bd_n->count() > 0 && bd_rho->count() > 0) {
        sink.line("estimation_error_bound," + fmt_g(estimation_error_bound(bd.rate, bd.n, bd.rho)));
      }
      wrote = true;
    }
    if (!wrote) {
      throw parameter_error("bounds: pass --rho1/--rho2/--n, --alpha/--beta, or --R");
    }
    sink.stamp();
  });

  // Let app-level flags like --fast appear after the subcommand name.
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const data_error& e) {
    std::cerr << "ingestion error: " << e.what() << "\n";
    return 3;
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
