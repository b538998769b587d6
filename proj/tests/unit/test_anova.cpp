#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "simstat/anova.hpp"
#include "simstat/errors.hpp"
#include "simstat/rng.hpp"
#include "simstat/variate.hpp"

using namespace simstat;
using doctest::Approx;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::vector<std::vector<double>> random_rows(RandomStream& s, std::size_t m, std::size_t n) {
  std::vector<std::vector<double>> rows(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (auto& v : rows[i]) v = static_cast<double>(i) * 0.7 + 10.0 * s.next_uniform();
  }
  return rows;
}

TreatmentMatrix to_matrix(const std::vector<std::vector<double>>& rows) {
  std::vector<NumVector> out;
  for (const auto& r : rows) out.emplace_back(r);
  return TreatmentMatrix(out);
}

}  // namespace

TEST_CASE("grand mean") {
  CHECK(grand_mean(TreatmentMatrix({NumVector{4, 4}, NumVector{4, 4}})) == 4);
  CHECK(grand_mean(TreatmentMatrix({NumVector{1, 2}, NumVector{3, 4}})) == 2.5);
  CHECK(grand_mean(TreatmentMatrix({NumVector{0, 0}, NumVector{10, 10}})) == 5);
}

TEST_CASE("sums of squares") {
  const TreatmentMatrix flat({NumVector{2, 2}, NumVector{2, 2}});
  CHECK(total_ss(flat) == 0);
  CHECK(between_ss(flat) == 0);
  CHECK(within_ss(flat) == 0);

  const std::vector<std::vector<double>> rows{{1, 2, 3}, {4, 5, 6}};
  const auto o = oracle::deviation_anova(rows);
  const auto x = to_matrix(rows);
  CHECK(grand_mean(x) == o.grand_mean);
  CHECK(total_ss(x) == Approx(o.sst).epsilon(1e-12));
  CHECK(between_ss(x) == Approx(o.ssb).epsilon(1e-12));
  CHECK(within_ss(x) == Approx(o.ssw).epsilon(1e-12));

  const TreatmentMatrix same({NumVector{1, 5, 9}, NumVector{1, 5, 9}});
  CHECK(std::abs(between_ss(same)) < 1e-12);
}

TEST_CASE("f statistic") {
  const std::vector<std::vector<double>> rows{{1, 2, 3}, {4, 5, 6}};
  const auto t = anova(to_matrix(rows));
  CHECK(t.f_statistic == Approx(oracle::deviation_anova(rows).f).epsilon(1e-12));
  CHECK(t.df_between == 1);
  CHECK(t.df_within == 4);
  CHECK(t.ms_between == Approx(13.5));
  CHECK(t.ms_within == Approx(1.0));

  const auto equal_means = anova(TreatmentMatrix({NumVector{4, 5, 6}, NumVector{0, 5, 10}}));
  CHECK(std::abs(equal_means.f_statistic) < 1e-12);

  CHECK_THROWS_AS((void)f_statistic(TreatmentMatrix({NumVector{1, 1}, NumVector{2, 2}})), DegenerateInputError);
}

TEST_CASE("p value is the Fisher upper tail") {
  RandomStream s(12);
  const auto t = anova(to_matrix(random_rows(s, 3, 5)));
  CHECK(t.p_value >= 0);
  CHECK(t.p_value <= 1);
  CHECK(std::abs(t.p_value - (1 - cdf(Distribution::fisher(2, 12), t.f_statistic))) < 1e-9);
}

TEST_CASE("decomposition and invariances on random matrices") {
  RandomStream s(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = 2 + static_cast<std::size_t>(s.next_uniform() * 5);
    const auto n = 2 + static_cast<std::size_t>(s.next_uniform() * 8);
    const auto rows = random_rows(s, m, n);
    const auto x = to_matrix(rows);
    const auto o = oracle::deviation_anova(rows);
    const double sst = total_ss(x);
    CHECK(rel_close(sst, between_ss(x) + within_ss(x), 1e-9));
    CHECK(rel_close(sst, o.sst, 1e-9));
    CHECK(rel_close(between_ss(x), o.ssb, 1e-9));
    CHECK(rel_close(within_ss(x), o.ssw, 1e-9));
    const double f = f_statistic(x);
    CHECK(rel_close(f, o.f, 1e-9));

    auto shifted = rows;
    auto scaled = rows;
    for (auto& r : shifted) for (auto& v : r) v += 50.0;
    for (auto& r : scaled) for (auto& v : r) v *= 3.5;
    CHECK(rel_close(f_statistic(to_matrix(shifted)), f, 1e-9));
    CHECK(rel_close(f_statistic(to_matrix(scaled)), f, 1e-9));

    if (m == 2) {
      const double t = oracle::pooled_t(rows[0], rows[1]).value;
      CHECK(rel_close(f, t * t, 1e-9));
    }
  }
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(TreatmentMatrix({NumVector{1, 2}}), ConstructionError);
  CHECK_THROWS_AS(TreatmentMatrix({NumVector{1, 2}, NumVector{1, 2, 3}}), ConstructionError);
  CHECK_THROWS_AS(TreatmentMatrix({NumVector{1}, NumVector{2}}), ConstructionError);
}
