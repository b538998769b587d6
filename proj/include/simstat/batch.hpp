#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "simstat/errors.hpp"
#include "simstat/numvec.hpp"
#include "simstat/rng.hpp"
#include "simstat/variate.hpp"

namespace simstat {

/// Producer of observations from one conceptually continuous run.
/// Each call to `produce` continues where the previous one stopped.
class SampleSource {
 public:
  virtual ~SampleSource() = default;
  virtual NumVector produce(std::size_t count) = 0;
};

/// Thrown by a finite source asked for more observations than it holds.
class SourceExhaustedError : public Error {
 public:
  using Error::Error;
};

/// i.i.d. draws from a distribution.
class DistributionSource final : public SampleSource {
 public:
  DistributionSource(Distribution dist, std::uint64_t seed, std::uint64_t stream_id = 0);
  NumVector produce(std::size_t count) override;

 private:
  Distribution dist_;
  RandomStream stream_;
};

/// Gaussian AR(1): x[t+1] = mean + φ(x[t] − mean) + ε, ε ~ Normal(0, innovation variance).
/// Starts at the mean. Requires |φ| < 1.
class Ar1Source final : public SampleSource {
 public:
  Ar1Source(double phi, double mean, double innovation_variance, std::uint64_t seed);
  NumVector produce(std::size_t count) override;

 private:
  double phi_;
  double mean_;
  Distribution noise_;
  RandomStream stream_;
  double state_;
};

/// Customer waiting times in queue of an M/M/1 system, via the Lindley recurrence
/// W₀ = 0, Wₖ₊₁ = max(0, Wₖ + Sₖ − Aₖ₊₁) with exponential service and interarrival
/// times. The first `warmup` observations are discarded at construction.
/// Throws DomainError unless 0 < arrival_rate < service_rate.
class Mm1WaitingTimeSource final : public SampleSource {
 public:
  Mm1WaitingTimeSource(double arrival_rate, double service_rate, std::uint64_t seed, std::size_t warmup = 0);
  NumVector produce(std::size_t count) override;

  /// Steady-state mean wait λ/(μ(μ − λ)).
  [[nodiscard]] double expected_wait() const;

 private:
  double arrival_rate_;
  double service_rate_;
  Distribution service_;
  Distribution interarrival_;
  RandomStream stream_;
  double wait_ = 0.0;
};

/// Reads observations sequentially from a fixed vector; throws SourceExhaustedError
/// when a request cannot be satisfied in full.
class VectorSource final : public SampleSource {
 public:
  explicit VectorSource(NumVector data);
  NumVector produce(std::size_t count) override;
  [[nodiscard]] std::size_t remaining() const noexcept { return data_.size() - cursor_; }

 private:
  NumVector data_;
  std::size_t cursor_ = 0;
};

struct BatchConfig {
  std::size_t initial_batch_size = 10;   // b₀ ≥ 2
  std::size_t initial_batch_count = 10;  // n₀ ≥ 3
  double acf_threshold = 0.1;
  double precision_threshold = 0.2;
  double confidence = 0.95;
  std::size_t max_observations = std::size_t{1} << 24;

  /// Throws ConstructionError on an invalid combination.
  void validate() const;
};

/// One pass of the doubling loop.
struct BatchAttempt {
  std::size_t batch_size = 0;
  std::size_t appended = 0;  // observations produced for this attempt
  double acf = 0.0;          // lag-1 autocorrelation of the batch means
};

struct FormedBatches {
  std::size_t batch_size = 0;
  NumVector data;
  NumVector batch_means;
  double acf = 0.0;
  std::vector<BatchAttempt> attempts;
};

struct BatchReport {
  std::size_t batch_size = 0;
  std::size_t total_observations = 0;
  NumVector batch_means;
  double grand_mean = 0.0;
  double half_width = 0.0;
  double relative_precision = 0.0;
  double final_acf = 0.0;
  std::size_t iterations_doubling = 0;
  std::size_t iterations_precision = 0;
};

/// The run stopped before both stopping rules held. `partial` holds whatever
/// was computed; fields that could not be computed are NaN.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, BatchReport partial)
      : Error(what), partial_(std::move(partial)) {}
  [[nodiscard]] const BatchReport& partial() const noexcept { return partial_; }

 private:
  BatchReport partial_;
};

/// A finite source ran out before convergence.
class InsufficientDataError : public NonConvergenceError {
 public:
  using NonConvergenceError::NonConvergenceError;
};

/// Relative precision is meaningless: |grand mean| ≤ 1e-12, or the observation
/// budget ran out while the confidence interval still covered zero.
class UndefinedPrecisionError : public Error {
 public:
  using Error::Error;
};

/// Means of the ⌊|x|/b⌋ consecutive full batches of size b; trailing partial batch dropped.
NumVector batch_means(const NumVector& x, std::size_t b);

/// Lag-1 autocorrelation used as the stopping statistic: constant (zero-variance)
/// batch means count as perfectly uncorrelated and yield 0.
double batch_acf(const NumVector& means);

/// Doubling loop: start with b₀·n₀ observations; while |ρ(batch means)| exceeds the
/// threshold, double b and append b·n₀ fresh observations.
FormedBatches form_batches(SampleSource& src, const BatchConfig& cfg);

/// Full procedure: form_batches, then append one batch at a time until the
/// relative precision (CI half-width / |grand mean|) meets its threshold. If the
/// extra batches push |ρ| back over the ACF threshold the doubling loop resumes
/// on the retained data, so a returned report satisfies both rules.
BatchReport run_batch_means(SampleSource& src, const BatchConfig& cfg);

}  // namespace simstat
