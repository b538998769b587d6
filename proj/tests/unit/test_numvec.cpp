#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "simstat/errors.hpp"
#include "simstat/numvec.hpp"
#include "simstat/rng.hpp"

using namespace simstat;
using doctest::Approx;

namespace {

NumVector random_vec(RandomStream& s, std::size_t n) {
  std::vector<double> xs(n);
  for (auto& x : xs) x = 20.0 * s.next_uniform() - 10.0;
  return NumVector(std::move(xs));
}

const NumVector kSeven{1, 2, 3, 4, 5, 6, 7};

}  // namespace

TEST_CASE("make") {
  const std::vector<double> src{1, 2, 3};
  CHECK(NumVector::make(src) == NumVector{1, 2, 3});
  CHECK(NumVector::make({}).size() == 0);
  CHECK(NumVector{4, 3, 2}.values()[0] == 4);
  CHECK(NumVector{4, 3, 2}.size() == 3);
}

TEST_CASE("construction rejects non-finite elements") {
  CHECK_THROWS_AS(NumVector({1.0, std::numeric_limits<double>::quiet_NaN()}), ConstructionError);
  CHECK_THROWS_AS(NumVector({std::numeric_limits<double>::infinity()}), ConstructionError);
}

TEST_CASE("at") {
  CHECK(at(kSeven, 2) == 3);
  CHECK(at(kSeven, 3) == 4);
  CHECK(at(NumVector{9}, 0) == 9);
  CHECK_THROWS_AS((void)at(kSeven, 7), IndexError);
}

TEST_CASE("slice") {
  CHECK(slice(kSeven, RangeSpec::to(2, 4)) == NumVector{3, 4, 5});
  CHECK(slice(kSeven, RangeSpec::until(2, 4)) == NumVector{3, 4});
  CHECK(slice(NumVector{1, 2, 3}, RangeSpec::to(2, 1)).empty());
  CHECK_THROWS_AS((void)slice(kSeven, RangeSpec::to(5, 7)), IndexError);
}

TEST_CASE("range iteration and emptiness") {
  CHECK(RangeSpec::to(1, 3).indices() == std::vector<std::int64_t>{1, 2, 3});
  CHECK(RangeSpec::until(1, 3).indices() == std::vector<std::int64_t>{1, 2});
  CHECK(RangeSpec::to(3, 2).empty());
  CHECK_FALSE(RangeSpec::to(3, 3).empty());
  CHECK(RangeSpec::until(3, 3).empty());
}

TEST_CASE("dot") {
  CHECK(dot(NumVector{1, 2, 3}, NumVector{4, 3, 2}) == 16);
  CHECK(dot(NumVector{1}, NumVector{1}) == 1);
  CHECK(dot(NumVector{1, 0, 0}, NumVector{0, 1, 0}) == 0);
  CHECK_THROWS_AS((void)dot(NumVector{1, 2}, NumVector{1}), DimensionError);
  CHECK_THROWS_AS((void)dot(NumVector{}, NumVector{}), DimensionError);
}

TEST_CASE("elementwise operations") {
  CHECK(pow_elem(NumVector{1, 2, 3}, 2) == NumVector{1, 4, 9});
  CHECK(mul_elem(NumVector{1, 2}, NumVector{3, 4}) == NumVector{3, 8});
  CHECK(concat(NumVector{1}, NumVector{2, 3}) == NumVector{1, 2, 3});
  CHECK(add(NumVector{1, 2}, NumVector{3, 4}) == NumVector{4, 6});
  CHECK(sub(NumVector{1, 2}, NumVector{3, 4}) == NumVector{-2, -2});
  CHECK(scale(NumVector{1, -2}, 3) == NumVector{3, -6});
  CHECK_THROWS_AS((void)add(NumVector{1}, NumVector{1, 2}), DimensionError);
}

TEST_CASE("properties over random vectors") {
  RandomStream s(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(s.next_uniform() * 50);
    const auto a = random_vec(s, n);
    const auto b = random_vec(s, n);
    const auto c = random_vec(s, n);
    const auto last = static_cast<std::int64_t>(n) - 1;

    CHECK(slice(a, RangeSpec::to(0, last)) == a);
    CHECK(dot(a, b) == dot(b, a));
    const double lhs = dot(a, add(b, c));
    const double rhs = dot(a, b) + dot(a, c);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)));

    const auto joined = concat(a, b);
    CHECK(joined.size() == a.size() + b.size());
    CHECK(slice(joined, RangeSpec::until(0, static_cast<std::int64_t>(n))) == a);
    CHECK(slice(joined, RangeSpec::until(static_cast<std::int64_t>(n), static_cast<std::int64_t>(2 * n))) == b);

    std::vector<double> positive;
    for (double x : a) positive.push_back(std::abs(x));
    const NumVector p(positive);
    const auto half = pow_elem(p, 0.5);
    const auto sqrt2 = root_elem(p, 2);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(half[i] - sqrt2[i]) <= 1e-12 * std::max(1.0, sqrt2[i]));
  }
}

TEST_CASE("operations return new values") {
  const NumVector a{1, 2, 3};
  const auto b = scale(a, 2);
  CHECK(a == NumVector{1, 2, 3});
  CHECK(b == NumVector{2, 4, 6});
}
