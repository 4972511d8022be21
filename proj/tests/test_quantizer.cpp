#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "support/quadrature.hpp"
#include "treeggm/errors.hpp"
#include "treeggm/math.hpp"
#include "treeggm/quantizer.hpp"
#include "treeggm/rng.hpp"

using namespace treeggm;

namespace {
constexpr double kTwoOverPi = 0.63661977236758138;
constexpr double kSqrtTwoOverPi = 0.79788456080286541;

std::vector<double> standard_normal_draws(int n, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> out(n);
  for (double& x : out) x = gauss(rng);
  return out;
}
}  // namespace

TEST_CASE("sign_encode: values, tie rule, machine id") {
  const Shard s{3, {-1.3, 0.2, 0.0}};
  const auto q = sign_encode(s);
  CHECK(q.machine == 3);
  CHECK(q.rate == 1);
  CHECK(q.indices == std::vector<std::uint16_t>{1, 2, 2});  // sign(0) = +1
  CHECK_THROWS_AS(sign_encode(Shard{0, {std::nan("")}}), data_error);
}

TEST_CASE("sign_encode: symmetric on standard normal draws") {
  const Shard s{0, standard_normal_draws(100000, 21)};
  const auto q = sign_encode(s);
  int pos = 0;
  for (auto i : q.indices) pos += i == 2;
  CHECK(std::abs(pos / 1e5 - 0.5) < 0.01);
}

TEST_CASE("sign pair agreement estimates theta(0.5) = 2/3") {
  constexpr int n = 100000;
  auto rng = make_rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  int agree = 0;
  for (int i = 0; i < n; ++i) {
    const double x = gauss(rng);
    const double y = 0.5 * x + std::sqrt(0.75) * gauss(rng);
    agree += (x < 0) == (y < 0);
  }
  CHECK(std::abs(agree / static_cast<double>(n) - 2.0 / 3.0) < 0.01);
}

TEST_CASE("R=1 codebook: closed-form half-normal centroids") {
  const Codebook cb(1);
  REQUIRE(cb.bins() == 2);
  CHECK(std::isinf(cb.boundaries()[0]));
  CHECK(std::abs(cb.boundaries()[1]) < 1e-12);
  CHECK(std::isinf(cb.boundaries()[2]));
  CHECK(cb.centroids()[0] == doctest::Approx(-kSqrtTwoOverPi).epsilon(1e-12));
  CHECK(cb.centroids()[1] == doctest::Approx(kSqrtTwoOverPi).epsilon(1e-12));
  CHECK(cb.sigma_u_sq() == doctest::Approx(kTwoOverPi).epsilon(1e-12));
}

TEST_CASE("R=2 codebook: quartile boundaries") {
  const Codebook cb(2);
  REQUIRE(cb.boundaries().size() == 5);
  CHECK(cb.boundaries()[1] == doctest::Approx(-0.6744897501960817).epsilon(1e-12));
  CHECK(std::abs(cb.boundaries()[2]) < 1e-12);
  CHECK(cb.boundaries()[3] == doctest::Approx(0.6744897501960817).epsilon(1e-12));
  // Frozen reference centroids (conditional means of the quartile bins).
  CHECK(cb.centroids()[0] == doctest::Approx(-1.27110629073643).epsilon(1e-12));
  CHECK(cb.centroids()[1] == doctest::Approx(-0.324662830869303).epsilon(1e-12));
  CHECK(cb.sigma_u_sq() == doctest::Approx(0.860558578048895).epsilon(1e-12));
}

TEST_CASE("boundaries solve Phi(a_i) = (i-1) 2^-R to 1e-12") {
  for (int rate : {1, 2, 4, 8, 12, 16}) {
    const Codebook cb(rate);
    const double mass = std::ldexp(1.0, -rate);
    const auto& b = cb.boundaries();
    for (std::size_t i = 1; i + 1 < b.size(); ++i) {
      CHECK(std::abs(normal_cdf(b[i]) - static_cast<double>(i) * mass) < 1e-12);
      CHECK(b[i] > b[i - 1]);
    }
  }
}

TEST_CASE("codebook structural invariants") {
  for (int rate : {1, 2, 3, 5, 8}) {
    const Codebook cb(rate);
    const auto& c = cb.centroids();
    const auto& b = cb.boundaries();
    const int m = cb.bins();
    double mean = 0.0;
    for (int i = 0; i < m; ++i) {
      CHECK(c[i] == -c[m - 1 - i]);               // exact antisymmetry
      CHECK(b[i] < c[i]);                         // centroid inside its bin
      CHECK(c[i] < b[i + 1]);
      if (i > 0) CHECK(c[i] > c[i - 1]);          // strictly increasing
      mean += c[i];
    }
    CHECK(std::abs(mean) < 1e-12);                // sum 2^-R c_i = 0
  }
}

TEST_CASE("codebook rate validation") {
  CHECK_THROWS_AS(Codebook(0), parameter_error);
  CHECK_THROWS_AS(Codebook(17), parameter_error);
  CHECK_NOTHROW(Codebook(16));
}

TEST_CASE("persym_encode: bin selection and boundary convention") {
  const Codebook cb1(1);
  CHECK(persym_encode(Shard{0, {-0.3}}, cb1).indices[0] == 1);
  const Codebook cb2(2);
  CHECK(persym_encode(Shard{0, {0.7}}, cb2).indices[0] == 4);  // 0.7 > 0.67449
  // Values exactly on a boundary go to the upper bin.
  const double b = cb2.boundaries()[3];
  CHECK(persym_encode(Shard{0, {b}}, cb2).indices[0] == 4);
  CHECK(persym_encode(Shard{0, {0.0}}, cb2).indices[0] == 3);
}

TEST_CASE("decode looks up centroids and rejects bad input") {
  const Codebook cb(1);
  const QuantizedShard q{0, 1, {1, 2}};
  const auto v = decode(q, cb);
  CHECK(v[0] == doctest::Approx(-0.797884560802865).epsilon(1e-12));
  CHECK(v[1] == doctest::Approx(0.797884560802865).epsilon(1e-12));
  CHECK_THROWS_AS(decode(QuantizedShard{0, 1, {3}}, cb), data_error);
  CHECK_THROWS_AS(decode(QuantizedShard{0, 2, {1}}, cb), data_error);  // rate mismatch
}

TEST_CASE("encode-decode-encode is idempotent") {
  for (int rate : {1, 2, 4, 7, 10}) {
    const Codebook cb(rate);
    QuantizedShard all{0, rate, {}};
    for (int i = 1; i <= cb.bins(); ++i) all.indices.push_back(static_cast<std::uint16_t>(i));
    const Shard decoded{0, decode(all, cb)};
    CHECK(persym_encode(decoded, cb).indices == all.indices);
  }
}

TEST_CASE("empirical reconstruction error matches 1 - sigma_u^2") {
  const Shard draws{0, standard_normal_draws(1000000, 47)};
  for (int rate : {1, 2, 4}) {
    const Codebook cb(rate);
    const auto u = decode(persym_encode(draws, cb), cb);
    double mse = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double diff = draws.values[i] - u[i];
      mse += diff * diff;
    }
    mse /= static_cast<double>(u.size());
    const double expected = reconstruction_distortion(cb);
    CHECK(std::abs(mse - expected) < 0.01 * expected + 1e-4);
  }
}

TEST_CASE("reconstruction error agrees with direct quadrature") {
  // Independent check: sum over bins of integral (x - c_i)^2 phi(x) dx.
  for (int rate : {1, 2, 3, 6}) {
    const Codebook cb(rate);
    double mse = 0.0;
    for (int i = 0; i < cb.bins(); ++i) {
      const double lo = std::max(cb.boundaries()[i], -10.0);
      const double hi = std::min(cb.boundaries()[i + 1], 10.0);
      const double c = cb.centroids()[i];
      mse += testsupport::simpson(
          [&](double x) { return (x - c) * (x - c) * testsupport::normal_density(x); }, lo, hi);
    }
    CHECK(mse == doctest::Approx(reconstruction_distortion(cb)).epsilon(1e-8));
  }
}

TEST_CASE("distortion constants and monotonicity") {
  CHECK(reconstruction_distortion(Codebook(1)) ==
        doctest::Approx(1.0 - kTwoOverPi).epsilon(1e-12));
  for (int rate = 1; rate <= 10; ++rate) {
    CHECK(reconstruction_distortion(Codebook(rate + 1)) <
          reconstruction_distortion(Codebook(rate)));
  }
  // Frozen regression values (independently derived from the quantile/density
  // closed forms).
  CHECK(reconstruction_distortion(Codebook(4)) ==
        doctest::Approx(0.0222248908547049).epsilon(1e-9));
  const double d8 = reconstruction_distortion(Codebook(8));
  CHECK(d8 < 0.01);
  CHECK(d8 == doctest::Approx(0.000743215380513806).epsilon(1e-9));
  CHECK(Codebook(12).sigma_u_sq() > 0.999);
}

TEST_CASE("bins are equiprobable on standard normal draws") {
  const auto draws = standard_normal_draws(1000000, 53);
  for (int rate : {1, 3, 6}) {
    const Codebook cb(rate);
    std::vector<int> counts(cb.bins(), 0);
    for (double x : draws) ++counts[cb.bin_index(x) - 1];
    const double q = std::ldexp(1.0, -rate);
    const double tol = 4.0 * std::sqrt(q * (1.0 - q) / 1e6);
    for (int i = 0; i < cb.bins(); ++i) {
      CHECK(std::abs(counts[i] / 1e6 - q) < tol);
    }
  }
}

TEST_CASE("centroids are empirically optimal reconstruction points") {
  const auto draws = standard_normal_draws(1000000, 59);
  for (int rate : {1, 2, 3}) {
    const Codebook cb(rate);
    // Per-bin sufficient statistics over the fixed draws.
    std::vector<long long> count(cb.bins(), 0);
    std::vector<double> sum_dev(cb.bins(), 0.0);  // sum of (x - c_i) within bin
    for (double x : draws) {
      const int i = cb.bin_index(x) - 1;
      ++count[i];
      sum_dev[i] += x - cb.centroids()[i];
    }
    for (int i = 0; i < cb.bins(); ++i) {
      for (double delta : {0.01, -0.01}) {
        // Change in total squared error when c_i moves by delta.
        const double change = count[i] * delta * delta - 2.0 * delta * sum_dev[i];
        CHECK(change > 0.0);
      }
    }
  }
}

TEST_CASE("sign and per-symbol partitions agree at R=1") {
  const Shard s{0, {-2.0, -0.0, 0.0, 1e-300, 0.3, 5.0}};
  const Codebook cb(1);
  CHECK(sign_encode(s).indices == persym_encode(s, cb).indices);
  const auto draws = Shard{0, standard_normal_draws(10000, 61)};
  CHECK(sign_encode(draws).indices == persym_encode(draws, cb).indices);
}

TEST_CASE("codebook dump format") {
  const Codebook cb(1);
  std::stringstream ss;
  cb.dump(ss);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "1 -inf -0.797884560802865");
  std::getline(ss, line);
  CHECK(line == "2 0 0.797884560802865");
  std::getline(ss, line);
  CHECK(line == "sigma_u_sq=0.636619772367581");
}
