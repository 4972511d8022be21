#include <doctest.h>

#include <cmath>

#include "support/quadrature.hpp"
#include "treeggm/errors.hpp"
#include "treeggm/math.hpp"

using namespace treeggm;

TEST_CASE("normal_cdf matches tabulated values") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-14));
  CHECK(normal_cdf(-1.0) == doctest::Approx(0.15865525393145705).epsilon(1e-14));
}

TEST_CASE("normal_quantile inverts the CDF to 1e-12 over the working range") {
  for (double p : {1.0 / 65536, 0.001, 0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999, 1 - 1.0 / 65536}) {
    const double x = normal_quantile(p);
    CHECK(std::abs(normal_cdf(x) - p) < 1e-14);
  }
  CHECK(normal_quantile(0.25) == doctest::Approx(-0.6744897501960817).epsilon(1e-13));
  CHECK(std::isinf(normal_quantile(0.0)));
  CHECK(std::isinf(normal_quantile(1.0)));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
  CHECK_THROWS_AS(normal_quantile(-0.1), parameter_error);
  CHECK_THROWS_AS(normal_quantile(1.1), parameter_error);
}

TEST_CASE("normal_cdf agrees with direct quadrature of the density") {
  for (double x : {-2.0, -0.5, 0.3, 1.7}) {
    const double mass = 0.5 + testsupport::simpson(testsupport::normal_density, 0.0, x);
    CHECK(normal_cdf(x) == doctest::Approx(mass).epsilon(1e-10));
  }
}
