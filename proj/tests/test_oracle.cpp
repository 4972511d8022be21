#include <doctest.h>

#include <cmath>
#include <random>

#include "treeggm/errors.hpp"
#include "treeggm/estimators.hpp"
#include "treeggm/oracle.hpp"
#include "treeggm/rng.hpp"

using namespace treeggm;

TEST_CASE("exact_crossover: hand enumerations") {
  const CrossoverParams p(0.5, 0.25, 0.25);
  CHECK(exact_crossover(p, 1) == doctest::Approx(0.75).epsilon(1e-13));  // p0 + p1
  CHECK(exact_crossover(p, 2) == doctest::Approx(0.6875).epsilon(1e-13));

  const CrossoverParams deterministic(1.0, 0.0, 0.0);
  CHECK(exact_crossover(deterministic, 50) == doctest::Approx(1.0).epsilon(1e-13));
  const CrossoverParams all_down(0.0, 0.0, 1.0);
  CHECK(exact_crossover(all_down, 3) == 0.0);
}

TEST_CASE("exact_crossover matches Monte Carlo at n=100") {
  const auto params = shared_node_probs(0.7, 0.3);
  const double exact = exact_crossover(params, 100);
  constexpr int kTrials = 1000000;
  auto rng = make_rng(149);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int crossed = 0;
  for (int t = 0; t < kTrials; ++t) {
    int sum = 0;
    for (int i = 0; i < 100; ++i) {
      const double u = uni(rng);
      if (u < params.p1) {
        ++sum;
      } else if (u < params.p1 + params.p2) {
        --sum;
      }
    }
    crossed += sum >= 0;
  }
  const double empirical = crossed / static_cast<double>(kTrials);
  const double se = std::sqrt(exact * (1.0 - exact) / kTrials);
  CHECK(std::abs(empirical - exact) < 4.0 * se);
}

TEST_CASE("exact_crossover: even-n subsequence is nonincreasing") {
  const auto params = shared_node_probs(0.9, 0.1);
  double prev = 1.0;
  for (int n = 2; n <= 300; n += 2) {
    const double p = exact_crossover(params, n);
    CHECK(p <= prev + 1e-15);
    prev = p;
  }
}

TEST_CASE("exact_crossover: stable in log space up to n=5000") {
  const auto params = shared_node_probs(0.9, 0.1);
  const double p = exact_crossover(params, 5000);
  CHECK(std::isfinite(p));
  CHECK(p >= 0.0);
  CHECK(p <= 1.0);
  CHECK_THROWS_AS(exact_crossover(params, 5001), parameter_error);
  CHECK_THROWS_AS(exact_crossover(params, 0), parameter_error);
}

TEST_CASE("brute_mwst small cases") {
  {
    EdgeWeights w(2);
    w.set(0, 1, 0.37);
    CHECK(brute_mwst(w).edges == std::vector<std::pair<int, int>>{{0, 1}});
  }
  {
    EdgeWeights w(3);
    w.set(0, 1, 1.0);
    w.set(0, 2, 1.0);
    w.set(1, 2, 1.0);
    CHECK(brute_mwst(w).edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
  }
  EdgeWeights big(9);
  CHECK_THROWS_AS(brute_mwst(big), parameter_error);
}

TEST_CASE("brute_mwst agrees with kruskal on random instances") {
  auto rng = make_rng(151);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    const int d = 3 + rep % 5;
    EdgeWeights w(d);
    for (int j = 0; j < d; ++j) {
      for (int k = j + 1; k < d; ++k) w.set(j, k, uni(rng));
    }
    REQUIRE(brute_mwst(w) == kruskal_mwst(w));
  }
}

TEST_CASE("numeric_orthant_check values") {
  CHECK(numeric_orthant_check(0.0) == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(numeric_orthant_check(0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(numeric_orthant_check(-0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-6));
  CHECK_THROWS_AS(numeric_orthant_check(1.0), parameter_error);
}

TEST_CASE("quadrature validates theta/2 across the rho range") {
  for (double rho : {-0.9, -0.3, 0.1, 0.45, 0.8, 0.95}) {
    CHECK(numeric_orthant_check(rho) ==
          doctest::Approx(theta_of_rho(rho) / 2.0).epsilon(1e-6));
  }
}
