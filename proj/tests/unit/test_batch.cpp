#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "simstat/batch.hpp"
#include "simstat/errors.hpp"
#include "simstat/stats.hpp"

using namespace simstat;
using doctest::Approx;

TEST_CASE("batch means") {
  CHECK(batch_means(NumVector{1, 2, 3, 4, 5, 6}, 2) == NumVector(oracle::brute_batch_means(std::vector<double>{1, 2, 3, 4, 5, 6}, 2)));
  CHECK(batch_means(NumVector{1, 2, 3, 4, 5, 6}, 2) == NumVector{1.5, 3.5, 5.5});
  const NumVector v{3, 1, 4, 1, 5};
  CHECK(batch_means(v, v.size()) == NumVector{mean(v)});
  CHECK(batch_means(NumVector{1, 2, 3, 4, 5}, 2) == NumVector{1.5, 3.5});
  CHECK_THROWS_AS((void)batch_means(NumVector{1, 2}, 3), DegenerateInputError);
}

TEST_CASE("grand mean of full batches equals the overall mean") {
  RandomStream s(8);
  for (std::size_t b : {1, 2, 5, 10, 25}) {
    const auto x = random_vector(Distribution::exponential(3), b * 40, s);
    CHECK(mean(batch_means(x, b)) == Approx(mean(x)).epsilon(1e-9));
  }
}

TEST_CASE("i.i.d. uniform source keeps the initial batch size") {
  DistributionSource src(Distribution::random(), 42);
  const auto f = form_batches(src, BatchConfig{});
  CHECK(f.batch_size == 10);
  DistributionSource again(Distribution::random(), 42);
  const auto direct = oracle::brute_batch_means(again.produce(100).values(), 10);
  CHECK(std::abs(oracle::lag1_direct(direct).value) <= 0.1);
}

TEST_CASE("AR(1) source forces doubling") {
  Ar1Source src(0.95, 10.0, 1.0, 42);
  const auto f = form_batches(src, BatchConfig{});
  CHECK(f.batch_size >= 20);
  CHECK(std::abs(f.acf) <= 0.1);
  CHECK(std::abs(oracle::lag1_direct(oracle::brute_batch_means(f.data.values(), f.batch_size)).value) <= 0.1);
}

TEST_CASE("observations appended per attempt double") {
  Ar1Source src(0.95, 10.0, 1.0, 42);
  BatchConfig cfg;
  const auto f = form_batches(src, cfg);
  REQUIRE(f.attempts.size() >= 2);
  std::size_t total = 0;
  for (std::size_t k = 0; k < f.attempts.size(); ++k) {
    const std::size_t b = cfg.initial_batch_size << k;
    CHECK(f.attempts[k].batch_size == b);
    CHECK(f.attempts[k].appended == b * cfg.initial_batch_count);
    total += f.attempts[k].appended;
  }
  CHECK(f.data.size() == total);
}

TEST_CASE("constant source") {
  DistributionSource src(Distribution::deterministic(5), 1);
  const auto f = form_batches(src, BatchConfig{});
  CHECK(f.batch_size == 10);
  CHECK(f.acf == 0);
  DistributionSource src2(Distribution::deterministic(5), 1);
  const auto r = run_batch_means(src2, BatchConfig{});
  CHECK(r.grand_mean == 5);
  CHECK(r.half_width == 0);
  CHECK(r.relative_precision == 0);
  CHECK(r.iterations_precision == 1);
  CHECK(r.batch_size == 10);
}

TEST_CASE("normal(10, 1) source") {
  DistributionSource src(Distribution::normal(10, 1), 7);
  const BatchConfig cfg;
  const auto r = run_batch_means(src, cfg);
  CHECK(r.grand_mean >= 9.8);
  CHECK(r.grand_mean <= 10.2);
  CHECK(r.relative_precision <= cfg.precision_threshold);
  CHECK(std::abs(r.final_acf) <= cfg.acf_threshold);
  CHECK(r.batch_means.size() == r.total_observations / r.batch_size);
  CHECK(r.relative_precision == Approx(r.half_width / std::abs(r.grand_mean)).epsilon(1e-15));
}

TEST_CASE("zero-mean source has undefined precision") {
  DistributionSource src(Distribution::normal(0, 1), 3);
  CHECK_THROWS_AS((void)run_batch_means(src, BatchConfig{}), UndefinedPrecisionError);
}

TEST_CASE("reports are deterministic") {
  Mm1WaitingTimeSource a(0.5, 1.0, 42, 1000);
  Mm1WaitingTimeSource b(0.5, 1.0, 42, 1000);
  const auto ra = run_batch_means(a, BatchConfig{});
  const auto rb = run_batch_means(b, BatchConfig{});
  CHECK(ra.batch_means == rb.batch_means);
  CHECK(ra.grand_mean == rb.grand_mean);
  CHECK(ra.half_width == rb.half_width);
  CHECK(ra.total_observations == rb.total_observations);
}

TEST_CASE("successful report meets both stopping rules") {
  BatchConfig cfg;
  cfg.precision_threshold = 0.05;
  Ar1Source src(0.9, 10.0, 1.0, 5);
  const auto r = run_batch_means(src, cfg);
  CHECK(std::abs(r.final_acf) <= cfg.acf_threshold);
  CHECK(std::abs(batch_acf(r.batch_means)) <= cfg.acf_threshold);
  CHECK(r.relative_precision <= cfg.precision_threshold);
}

TEST_CASE("observation cap raises non-convergence") {
  BatchConfig cfg;
  cfg.max_observations = 150;
  Ar1Source src(0.99, 10.0, 1.0, 42);
  CHECK_THROWS_AS((void)run_batch_means(src, cfg), NonConvergenceError);
}

TEST_CASE("finite source runs out") {
  VectorSource src(NumVector{1, 2, 3});
  try {
    (void)run_batch_means(src, BatchConfig{});
    FAIL("expected InsufficientDataError");
  } catch (const InsufficientDataError& e) {
    CHECK(e.partial().total_observations == 0);
  }
}

TEST_CASE("M/M/1 long-run mean wait") {
  Mm1WaitingTimeSource src(0.9, 1.0, 2024, 10000);
  const double expected = oracle::mm1_expected_wait(0.9, 1.0).value;
  CHECK(src.expected_wait() == Approx(expected));
  const double m = mean(src.produce(1000000));
  CHECK(std::abs(m - expected) <= 0.15 * expected);
}

TEST_CASE("M/M/1 light traffic and validation") {
  Mm1WaitingTimeSource src(0.1, 10.0, 1);
  const auto w = src.produce(10000);
  const auto zeros = std::count(w.begin(), w.end(), 0.0);
  CHECK(static_cast<double>(zeros) / 10000.0 > 0.95);
  CHECK_THROWS_AS(Mm1WaitingTimeSource(1.0, 1.0, 1), DomainError);
  Mm1WaitingTimeSource a(0.5, 1.0, 9);
  Mm1WaitingTimeSource b(0.5, 1.0, 9);
  CHECK(a.produce(100) == b.produce(100));
}

TEST_CASE("sources continue one run") {
  DistributionSource whole(Distribution::exponential(1), 4);
  DistributionSource parts(Distribution::exponential(1), 4);
  const auto all = whole.produce(30);
  const auto head = parts.produce(10);
  const auto tail = parts.produce(20);
  const auto joined = concat(head, tail);
  CHECK(all == joined);
}

TEST_CASE("config validation") {
  BatchConfig cfg;
  cfg.initial_batch_size = 1;
  CHECK_THROWS_AS(cfg.validate(), ConstructionError);
  cfg = BatchConfig{};
  cfg.initial_batch_count = 2;
  CHECK_THROWS_AS(cfg.validate(), ConstructionError);
  cfg = BatchConfig{};
  cfg.acf_threshold = 0;
  CHECK_THROWS_AS(cfg.validate(), ConstructionError);
}
