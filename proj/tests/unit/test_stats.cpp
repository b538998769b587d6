#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "simstat/errors.hpp"
#include "simstat/stats.hpp"
#include "simstat/variate.hpp"

using namespace simstat;
using doctest::Approx;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

NumVector affine(const NumVector& x, double a, double b) {
  std::vector<double> out;
  for (double v : x) out.push_back(a * v + b);
  return NumVector(out);
}

NumVector random_vec(RandomStream& s, std::size_t n, double scale, double shift) {
  std::vector<double> out(n);
  for (auto& v : out) v = shift + scale * (s.next_uniform() - 0.5);
  return NumVector(out);
}

}  // namespace

TEST_CASE("mean") {
  CHECK(mean(NumVector{1, 2, 3}) == 2);
  CHECK(mean(NumVector{7.25, 7.25, 7.25}) == 7.25);
  CHECK(mean(NumVector{1, 2, 3, 4, 5, 6, 7, 8}) == oracle::deviation_mean(std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8}).value);
  CHECK_THROWS_AS((void)mean(NumVector{}), EmptyInputError);
}

TEST_CASE("mean square") {
  CHECK(mean_square(NumVector{1, 2, 3}) == Approx(14.0 / 3.0).epsilon(1e-15));
  CHECK(mean_square(NumVector{0, 0}) == 0);
  CHECK(mean_square(NumVector{-2, 2}) == 4);
}

TEST_CASE("variances") {
  CHECK(pop_variance(NumVector{3, 3, 3}) == 0);
  CHECK(pop_variance(NumVector{1, 2, 3, 4}) == Approx(oracle::deviation_variance(std::vector<double>{1, 2, 3, 4}).value));
  CHECK(pop_variance(NumVector{-1, 1}) == 1);
  CHECK(sample_variance(NumVector{1, 2, 3, 4}) == Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(sample_variance(NumVector{-1, 1}) == 2);
  CHECK(sample_variance(NumVector{4, 4}) == 0);
  CHECK_THROWS_AS((void)sample_variance(NumVector{1}), DegenerateInputError);
}

TEST_CASE("standard deviation") {
  CHECK(std_dev(NumVector{-1, 1}) == 1);
  CHECK(std_dev(NumVector{2, 2, 2}) == 0);
  CHECK(std::abs(std_dev(NumVector{1, 2, 3, 4}) - std::sqrt(1.25)) < 1e-9);
}

TEST_CASE("skewness") {
  CHECK(std::abs(skewness(NumVector{-3, 0, 3})) < 1e-12);
  CHECK(skewness(NumVector{1, 2, 3, 4, 100}) > 0);
  const std::vector<double> x{0, 0, 0, 1};
  CHECK(skewness(NumVector(x)) == Approx(oracle::deviation_skewness(x).value).epsilon(1e-12));
  CHECK(std::abs(skewness(NumVector(x)) - 1.1547) < 1e-4);
  CHECK_THROWS_AS((void)skewness(NumVector{5, 5}), DegenerateInputError);
}

TEST_CASE("covariance") {
  const NumVector x{1, 4, 2, 8};
  CHECK(covariance(x, x) == Approx(pop_variance(x)));
  CHECK(covariance(NumVector{1, 2, 3}, NumVector{3, 2, 1}) == Approx(-2.0 / 3.0).epsilon(1e-14));
  CHECK(covariance(NumVector{1, 2, 3}, NumVector{5, 5, 5}) == 0);
  CHECK_THROWS_AS((void)covariance(NumVector{1, 2}, NumVector{1}), DimensionError);
}

TEST_CASE("correlation") {
  const NumVector x{1, 4, 2, 8};
  CHECK(correlation(x, x) == Approx(1.0));
  CHECK(correlation(NumVector{1, 2, 3}, NumVector{3, 2, 1}) == Approx(-1.0));
  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> b{1, 3, 2, 4};
  CHECK(correlation(NumVector(a), NumVector(b)) == Approx(oracle::pearson_direct(a, b).value).epsilon(1e-14));
  CHECK(correlation(NumVector(a), NumVector(b)) == Approx(0.8).epsilon(1e-14));
  CHECK_THROWS_AS((void)correlation(NumVector{1, 2}, NumVector{3, 3}), DegenerateInputError);
}

TEST_CASE("autocorrelation") {
  CHECK(autocorrelation(NumVector{1, 2, 3, 4, 5, 6}) == Approx(1.0));
  CHECK(autocorrelation(NumVector{1, -1, 1, -1, 1, -1}) == Approx(-1.0));
  CHECK_THROWS_AS((void)autocorrelation(NumVector{1, 2}), DegenerateInputError);
  CHECK_THROWS_AS((void)autocorrelation(NumVector{1, 1, 1, 1}), DegenerateInputError);
  RandomStream s(31);
  const auto u = random_vector(Distribution::random(), 50000, s);
  CHECK(std::abs(autocorrelation(u)) < 0.02);
}

TEST_CASE("interval half width") {
  CHECK(interval_half_width(NumVector{3, 3, 3, 3}) == 0);
  // ten values with sample standard deviation 1
  std::vector<double> ten;
  for (int i = 0; i < 10; ++i) ten.push_back(i % 2 == 0 ? -1.0 : 1.0);
  const double scale = 1.0 / std::sqrt(sample_variance(NumVector(ten)));
  const auto x = affine(NumVector(ten), scale, 0.0);
  CHECK(std::abs(interval_half_width(x) - 2.262 / std::sqrt(10.0)) < 1e-3);
  double prev = interval_half_width(x, 0.99);
  for (double c : {0.95, 0.9, 0.5, 0.25, 0.1, 0.01}) {
    const double h = interval_half_width(x, c);
    CHECK(h < prev);
    prev = h;
  }
  CHECK_THROWS_AS((void)interval_half_width(NumVector{1}), DegenerateInputError);
}

TEST_CASE("moment forms agree with deviation forms on random vectors") {
  RandomStream s(404);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 3 + static_cast<std::size_t>(s.next_uniform() * 200);
    const auto x = random_vec(s, n, 10.0, 5.0 * (s.next_uniform() - 0.5));
    const auto y = random_vec(s, n, 4.0, 1.0);
    CHECK(rel_close(pop_variance(x), oracle::deviation_variance(x.values()).value, 1e-9));
    CHECK(rel_close(skewness(x), oracle::deviation_skewness(x.values()).value, 1e-9));
    CHECK(rel_close(covariance(x, y), covariance(y, x), 1e-12));
    CHECK(rel_close(covariance(x, y), oracle::deviation_covariance(x.values(), y.values()).value, 1e-9));
    const double r = correlation(x, y);
    CHECK(rel_close(correlation(affine(x, 3.0, -7.0), y), r, 1e-9));
    CHECK(rel_close(correlation(x, affine(y, 0.5, 100.0)), r, 1e-9));
    const auto shifted = affine(x, 1.0, 12.5);
    CHECK(rel_close(pop_variance(shifted), pop_variance(x), 1e-9));
    CHECK(std::abs(skewness(shifted) - skewness(x)) < 1e-9);
    CHECK(std::abs(autocorrelation(shifted) - autocorrelation(x)) < 1e-9);
    const double nn = static_cast<double>(n);
    CHECK(sample_variance(x) * (nn - 1) / nn == Approx(pop_variance(x)).epsilon(1e-15));
  }
}

TEST_CASE("summary") {
  const auto s = summarize(NumVector{1, 2, 3, 4});
  CHECK(s.n == 4);
  CHECK(s.mean == 2.5);
  CHECK(s.pop_variance == 1.25);
  CHECK(s.sample_variance.has_value());
  CHECK(s.mean_square >= s.mean * s.mean - 1e-12);
  CHECK(s.std_dev == Approx(std::sqrt(1.25)));
  const auto one = summarize(NumVector{9});
  CHECK_FALSE(one.sample_variance.has_value());
  CHECK_FALSE(one.skewness.has_value());
}
