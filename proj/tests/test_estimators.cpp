#include <doctest.h>

#include <cmath>
#include <random>

#include "support/quadrature.hpp"
#include "treeggm/errors.hpp"
#include "treeggm/estimators.hpp"
#include "treeggm/rng.hpp"

using namespace treeggm;

TEST_CASE("gaussian_mi values and symmetry") {
  CHECK(gaussian_mi(0.0) == 0.0);
  CHECK(gaussian_mi(0.5) == doctest::Approx(0.14384103622589045).epsilon(1e-12));
  CHECK(gaussian_mi(-0.5) == gaussian_mi(0.5));
  CHECK_THROWS_AS(gaussian_mi(1.0), parameter_error);
  CHECK_THROWS_AS(gaussian_mi(-1.5), parameter_error);
}

TEST_CASE("gaussian_mi agrees with 2-D quadrature of the integrand") {
  const double rho = 0.5;
  const double det = 1.0 - rho * rho;
  auto joint = [&](double x, double y) {
    return std::exp(-(x * x - 2.0 * rho * x * y + y * y) / (2.0 * det)) /
           (2.0 * std::acos(-1.0) * std::sqrt(det));
  };
  auto integrand = [&](double x) {
    return testsupport::simpson(
        [&](double y) {
          const double p = joint(x, y);
          if (p < 1e-300) return 0.0;
          const double marg = testsupport::normal_density(x) * testsupport::normal_density(y);
          return p * std::log(p / marg);
        },
        -8.0, 8.0, 512);
  };
  const double mi = testsupport::simpson(integrand, -8.0, 8.0, 512);
  CHECK(mi == doctest::Approx(gaussian_mi(rho)).epsilon(1e-6));
}

TEST_CASE("theta_of_rho values and reflection") {
  CHECK(theta_of_rho(0.0) == 0.5);
  CHECK(theta_of_rho(0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(theta_of_rho(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  for (double rho : {0.1, 0.33, 0.77, 0.999}) {
    CHECK(theta_of_rho(-rho) == doctest::Approx(1.0 - theta_of_rho(rho)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(theta_of_rho(1.01), parameter_error);
}

TEST_CASE("binary_mi values, symmetry, edge cases") {
  CHECK(binary_mi(0.5) == 0.0);
  CHECK(binary_mi(1.0) == 1.0);
  CHECK(binary_mi(0.0) == 1.0);
  CHECK(binary_mi(2.0 / 3.0) == doctest::Approx(0.081704165945510443).epsilon(1e-12));
  for (double t : {0.1, 0.3, 0.62}) {
    CHECK(binary_mi(t) == doctest::Approx(binary_mi(1.0 - t)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(binary_mi(-0.1), parameter_error);
  CHECK_THROWS_AS(binary_mi(1.1), parameter_error);
}

TEST_CASE("estimate_theta counts agreements") {
  const QuantizedShard u{0, 1, {2, 2}};
  const QuantizedShard v{1, 1, {2, 1}};
  CHECK(estimate_theta(u, v).theta_hat == 0.5);
  CHECK(estimate_theta(u, u).theta_hat == 1.0);
  CHECK(estimate_theta(u, u).rho_bar == 1.0);
  CHECK_THROWS_AS(estimate_theta(u, QuantizedShard{1, 1, {1}}), data_error);
  CHECK_THROWS_AS(estimate_theta(u, QuantizedShard{1, 4, {2, 2}}), data_error);
}

TEST_CASE("estimate_theta is unbiased at rho = 0.5") {
  constexpr int n = 100000;
  auto rng = make_rng(71);
  std::normal_distribution<double> gauss(0.0, 1.0);
  QuantizedShard u{0, 1, std::vector<std::uint16_t>(n)};
  QuantizedShard v{1, 1, std::vector<std::uint16_t>(n)};
  for (int i = 0; i < n; ++i) {
    const double x = gauss(rng);
    const double y = 0.5 * x + std::sqrt(0.75) * gauss(rng);
    u.indices[i] = x < 0 ? 1 : 2;
    v.indices[i] = y < 0 ? 1 : 2;
  }
  CHECK(std::abs(estimate_theta(u, v).theta_hat - 2.0 / 3.0) < 0.005);
}

TEST_CASE("sign-flip symmetry: negating one shard maps theta_hat to 1 - theta_hat") {
  auto rng = make_rng(73);
  std::normal_distribution<double> gauss(0.0, 1.0);
  QuantizedShard u{0, 1, {}};
  QuantizedShard v{1, 1, {}};
  for (int i = 0; i < 1000; ++i) {
    u.indices.push_back(gauss(rng) < 0 ? 1 : 2);
    v.indices.push_back(gauss(rng) < 0 ? 1 : 2);
  }
  QuantizedShard u_flipped = u;
  for (auto& idx : u_flipped.indices) idx = idx == 1 ? 2 : 1;
  const double t = estimate_theta(u, v).theta_hat;
  const double t_flipped = estimate_theta(u_flipped, v).theta_hat;
  CHECK(t_flipped == 1.0 - t);  // exact, counts are integers
}

TEST_CASE("sample_corr basics") {
  const std::vector<double> a{1.0, -1.0, 2.0};
  CHECK(sample_corr(a, a) == doctest::Approx(2.0));
  auto rng = make_rng(79);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(100000), y(100000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = gauss(rng);
    y[i] = gauss(rng);
  }
  CHECK(std::abs(sample_corr(x, y)) < 0.02);
  const double self = sample_corr(x, x);
  CHECK(self == doctest::Approx(1.0).epsilon(0.02));
  CHECK_THROWS_AS(sample_corr(a, x), data_error);
}

TEST_CASE("R=1 decoded correlation vs raw: bounded gap, frozen regression value") {
  // rho = 0.5 pairs, n = 1e5, fixed seed. The gap is dominated by the
  // quantizer's shrinkage of the correlation and must stay below the
  // distortion bound sqrt(D)+sqrt(D)+D with D = 1 - 2/pi.
  constexpr int n = 100000;
  auto rng = make_rng(211);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Shard x{0, std::vector<double>(n)}, y{1, std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    const double z = gauss(rng);
    x.values[i] = z;
    y.values[i] = 0.5 * z + std::sqrt(0.75) * gauss(rng);
  }
  const Codebook cb(1);
  const auto u = decode(sign_encode(x), cb);
  const auto v = decode(sign_encode(y), cb);
  const double gap = std::abs(sample_corr(x.values, y.values) - sample_corr(u, v));
  const double d = reconstruction_distortion(cb);
  CHECK(gap <= 2.0 * std::sqrt(d) + d);
  CHECK(gap == doctest::Approx(0.2885775534843672).epsilon(1e-12));
}

TEST_CASE("unbiased_rho_sq formula and limits") {
  CHECK(unbiased_rho_sq(0.0, 100) == doctest::Approx(-1.0 / 101.0).epsilon(1e-15));
  CHECK(unbiased_rho_sq(0.3, 1000000000) == doctest::Approx(0.09).epsilon(1e-7));
  CHECK_THROWS_AS(unbiased_rho_sq(0.5, 0), parameter_error);
}

TEST_CASE("unbiased_rho_sq is unbiased in Monte Carlo") {
  constexpr double rho = 0.5;
  constexpr int n = 1000;
  constexpr int reps = 10000;
  auto rng = make_rng(83);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double mean = 0.0;
  for (int r = 0; r < reps; ++r) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = gauss(rng);
      const double y = rho * x + std::sqrt(1 - rho * rho) * gauss(rng);
      sum += x * y;
    }
    mean += unbiased_rho_sq(sum / n, n);
  }
  mean /= reps;
  CHECK(std::abs(mean - rho * rho) < 0.005);
}

TEST_CASE("order preservation: sign MI ranks pairs like Gaussian MI") {
  auto rng = make_rng(89);
  std::uniform_real_distribution<double> uni(-0.999, 0.999);
  for (int i = 0; i < 10000; ++i) {
    const double r1 = uni(rng);
    const double r2 = uni(rng);
    const double g1 = gaussian_mi(r1);
    const double g2 = gaussian_mi(r2);
    if (g1 == g2) continue;
    const double b1 = binary_mi(theta_of_rho(r1));
    const double b2 = binary_mi(theta_of_rho(r2));
    if (g1 > g2) {
      REQUIRE(b1 > b2);
    } else {
      REQUIRE(b1 < b2);
    }
  }
}

TEST_CASE("binary MI of theta(rho) is strictly increasing in |rho|") {
  double prev = -1.0;
  for (int i = 1; i < 200; ++i) {
    const double rho = i / 200.0;
    const double v = binary_mi(theta_of_rho(rho));
    REQUIRE(v > prev);
    prev = v;
  }
}
