#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"

using doctest::Approx;

TEST_CASE("deviation variance of 1..4") {
  const std::vector<double> x{1, 2, 3, 4};
  CHECK(oracle::deviation_variance(x).value == Approx(1.25).epsilon(1e-15));
}

TEST_CASE("deviation skewness of symmetric data is zero") {
  const std::vector<double> x{-3, -1, 0, 1, 3};
  CHECK(std::abs(oracle::deviation_skewness(x).value) < 1e-15);
}

TEST_CASE("pearson of a vector with itself is one") {
  const std::vector<double> x{0.3, 1.7, -2.2, 5.0};
  CHECK(oracle::pearson_direct(x, x).value == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("reference cdf of the standard normal at 1.96") {
  CHECK(oracle::reference_cdf("normal", {0, 1}, 1.96).value == Approx(0.9750021048517795).epsilon(1e-6));
}

TEST_CASE("reference cdf of the exponential at zero") {
  CHECK(oracle::reference_cdf("exponential", {1}, 0.0).value == 0.0);
}

TEST_CASE("reference cdf of fisher(4, 10) carries unit mass") {
  CHECK(oracle::reference_cdf("fisher", {4, 10}, 1e6).value == Approx(1.0).epsilon(1e-6));
}

TEST_CASE("quadrature of a polynomial") {
  auto cube = [](double x, const std::vector<double>&) { return x * x * x; };
  CHECK(oracle::quadrature(cube, {}, 0.0, 2.0) == Approx(4.0).epsilon(1e-14));
}

TEST_CASE("brute batch means drop the remainder") {
  const std::vector<double> x{1, 2, 3, 4, 5};
  CHECK(oracle::brute_batch_means(x, 2) == std::vector<double>{1.5, 3.5});
}

TEST_CASE("deviation anova on the 2x3 example") {
  const auto a = oracle::deviation_anova({{1, 2, 3}, {4, 5, 6}});
  CHECK(a.grand_mean == 3.5);
  CHECK(a.sst == Approx(17.5).epsilon(1e-15));
  CHECK(a.ssb == Approx(13.5).epsilon(1e-15));
  CHECK(a.ssw == Approx(4.0).epsilon(1e-15));
  CHECK(a.f == Approx(13.5).epsilon(1e-15));
}
