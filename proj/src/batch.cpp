#include "simstat/batch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "simstat/format.hpp"
#include "simstat/stats.hpp"

namespace simstat {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Shared state of one batch-means run; data only ever grows by appending.
class BatchRun {
 public:
  BatchRun(SampleSource& src, const BatchConfig& cfg) : src_(src), cfg_(cfg), b_(cfg.initial_batch_size) {}

  void start() {
    const std::size_t first = b_ * cfg_.initial_batch_count;
    append(first);
    settle_attempt(first);
  }

  // Doubles b until the batch means are decorrelated.
  void double_until_decorrelated() {
    while (std::abs(acf_) > cfg_.acf_threshold) {
      b_ *= 2;
      const std::size_t appended = b_ * cfg_.initial_batch_count;
      append(appended);
      ++doublings_;
      settle_attempt(appended);
    }
  }

  // Adds one batch at a time until the relative precision target is met.
  // Running moments give a z-based lower bound on the t half-width, so the
  // exact interval is only computed when the target might be within reach.
  void refine_precision() {
    const double z = inverse_cdf(Distribution::normal(0.0, 1.0), 0.5 + cfg_.confidence / 2.0);
    double k = 0.0;
    double m = 0.0;
    double m2 = 0.0;
    const auto absorb = [&](double x) {
      k += 1.0;
      const double d = x - m;
      m += d / k;
      m2 += d * (x - m);
    };
    for (double x : means_) absorb(x);
    for (;;) {
      ++precision_iterations_;
      const double bound = z * std::sqrt(m2 / (k - 1.0) / k) / std::abs(m);
      if (!(bound > cfg_.precision_threshold * (1.0 + 1e-9)) || std::abs(m) <= 1e-9) {
        const NumVector means(means_);
        grand_mean_ = mean(means);
        if (std::abs(grand_mean_) <= 1e-12) {
          throw UndefinedPrecisionError("relative precision undefined: grand mean is zero");
        }
        half_width_ = interval_half_width(means, cfg_.confidence);
        relative_precision_ = half_width_ / std::abs(grand_mean_);
        if (relative_precision_ <= cfg_.precision_threshold) break;
      }
      try {
        append(b_);
      } catch (const NonConvergenceError& e) {
        const auto& p = e.partial();
        if (p.half_width >= std::abs(p.grand_mean)) {
          throw UndefinedPrecisionError("relative precision undefined: grand mean " + format_real(p.grand_mean) +
                                        " is indistinguishable from zero after " +
                                        std::to_string(p.total_observations) + " observations");
        }
        throw;
      }
      // Earlier batches are unchanged; average only the newly completed ones.
      while ((means_.size() + 1) * b_ <= data_.size()) {
        const auto first = data_.begin() + static_cast<std::ptrdiff_t>(means_.size() * b_);
        means_.push_back(mean(NumVector(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(b_)))));
        absorb(means_.back());
      }
    }
    acf_ = batch_acf(NumVector(means_));
  }

  [[nodiscard]] bool decorrelated() const { return std::abs(acf_) <= cfg_.acf_threshold; }

  [[nodiscard]] FormedBatches formed() const {
    return {b_, NumVector(data_), NumVector(means_), acf_, attempts_};
  }

  [[nodiscard]] BatchReport report() const {
    BatchReport r;
    r.batch_size = b_;
    r.total_observations = data_.size();
    r.batch_means = NumVector(means_);
    r.grand_mean = grand_mean_;
    r.half_width = half_width_;
    r.relative_precision = relative_precision_;
    r.final_acf = acf_;
    r.iterations_doubling = doublings_;
    r.iterations_precision = precision_iterations_;
    return r;
  }

  // Best-effort report for error paths.
  [[nodiscard]] BatchReport partial() const {
    BatchReport r = report();
    r.grand_mean = kNaN;
    r.half_width = kNaN;
    r.relative_precision = kNaN;
    if (!means_.empty()) {
      const NumVector means(means_);
      r.grand_mean = mean(means);
      if (means.size() >= 2) {
        r.half_width = interval_half_width(means, cfg_.confidence);
        if (std::abs(r.grand_mean) > 1e-12) r.relative_precision = r.half_width / std::abs(r.grand_mean);
      }
    }
    return r;
  }

 private:
  void append(std::size_t count) {
    if (data_.size() + count > cfg_.max_observations) {
      throw NonConvergenceError("no convergence within " + std::to_string(cfg_.max_observations) +
                                    " observations (batch size " + std::to_string(b_) + ")",
                                partial());
    }
    NumVector fresh;
    try {
      fresh = src_.produce(count);
    } catch (const SourceExhaustedError& e) {
      throw InsufficientDataError(std::string("insufficient data: ") + e.what(), partial());
    }
    data_.insert(data_.end(), fresh.begin(), fresh.end());
  }

  void settle_attempt(std::size_t appended) {
    means_ = batch_means(NumVector(data_), b_).data();
    if (means_.size() < 3) {
      throw DegenerateInputError("batch means: fewer than 3 batches at batch size " + std::to_string(b_));
    }
    acf_ = batch_acf(NumVector(means_));
    attempts_.push_back({b_, appended, acf_});
  }

  SampleSource& src_;
  const BatchConfig& cfg_;
  std::size_t b_;
  std::vector<double> data_;   // every observation so far
  std::vector<double> means_;  // batch means at the current batch size
  double acf_ = kNaN;
  double grand_mean_ = kNaN;
  double half_width_ = kNaN;
  double relative_precision_ = kNaN;
  std::size_t doublings_ = 0;
  std::size_t precision_iterations_ = 0;
  std::vector<BatchAttempt> attempts_;
};

}  // namespace

DistributionSource::DistributionSource(Distribution dist, std::uint64_t seed, std::uint64_t stream_id)
    : dist_(std::move(dist)), stream_(seed, stream_id) {}

NumVector DistributionSource::produce(std::size_t count) { return random_vector(dist_, count, stream_); }

Ar1Source::Ar1Source(double phi, double mean, double innovation_variance, std::uint64_t seed)
    : phi_(phi),
      mean_(mean),
      noise_(Distribution::normal(0.0, innovation_variance)),
      stream_(seed),
      state_(mean) {
  if (!(std::abs(phi) < 1.0)) throw DomainError("AR(1): |phi| must be below 1");
  if (!std::isfinite(mean)) throw DomainError("AR(1): mean must be finite");
}

NumVector Ar1Source::produce(std::size_t count) {
  std::vector<double> out(count);
  for (auto& x : out) {
    state_ = mean_ + phi_ * (state_ - mean_) + draw(noise_, stream_);
    x = state_;
  }
  return NumVector(std::move(out));
}

namespace {

Distribution exponential_with_rate(double rate, const char* what) {
  if (!(std::isfinite(rate) && rate > 0.0)) throw DomainError(std::string("M/M/1: ") + what + " must be positive");
  return Distribution::exponential(1.0 / rate);
}

}  // namespace

Mm1WaitingTimeSource::Mm1WaitingTimeSource(double arrival_rate, double service_rate, std::uint64_t seed,
                                           std::size_t warmup)
    : arrival_rate_(arrival_rate),
      service_rate_(service_rate),
      service_(exponential_with_rate(service_rate, "service rate")),
      interarrival_(exponential_with_rate(arrival_rate, "arrival rate")),
      stream_(seed) {
  if (!(arrival_rate < service_rate)) {
    throw DomainError("M/M/1: unstable queue (arrival rate must be below service rate)");
  }
  for (std::size_t i = 0; i < warmup; ++i) {
    const double service = draw(service_, stream_);
    wait_ = std::max(0.0, wait_ + service - draw(interarrival_, stream_));
  }
}

NumVector Mm1WaitingTimeSource::produce(std::size_t count) {
  std::vector<double> out(count);
  for (auto& w : out) {
    w = wait_;
    const double service = draw(service_, stream_);
    wait_ = std::max(0.0, wait_ + service - draw(interarrival_, stream_));
  }
  return NumVector(std::move(out));
}

double Mm1WaitingTimeSource::expected_wait() const {
  return arrival_rate_ / (service_rate_ * (service_rate_ - arrival_rate_));
}

VectorSource::VectorSource(NumVector data) : data_(std::move(data)) {}

NumVector VectorSource::produce(std::size_t count) {
  if (count > remaining()) {
    throw SourceExhaustedError("requested " + std::to_string(count) + " observations, " +
                               std::to_string(remaining()) + " remain");
  }
  const auto lo = static_cast<std::int64_t>(cursor_);
  cursor_ += count;
  return slice(data_, RangeSpec::until(lo, static_cast<std::int64_t>(cursor_)));
}

void BatchConfig::validate() const {
  if (initial_batch_size < 2) throw ConstructionError("batch config: initial batch size must be at least 2");
  if (initial_batch_count < 3) throw ConstructionError("batch config: initial batch count must be at least 3");
  if (!(acf_threshold > 0.0)) throw ConstructionError("batch config: ACF threshold must be positive");
  if (!(precision_threshold > 0.0)) throw ConstructionError("batch config: precision threshold must be positive");
  if (!(confidence > 0.0 && confidence < 1.0)) throw ConstructionError("batch config: confidence must lie in (0, 1)");
  if (max_observations < initial_batch_size * initial_batch_count) {
    throw ConstructionError("batch config: max observations below the initial sample size");
  }
}

NumVector batch_means(const NumVector& x, std::size_t b) {
  if (b < 1) throw DomainError("batch means: batch size must be positive");
  if (x.size() < b) throw DegenerateInputError("batch means: fewer observations than one batch");
  const std::size_t k = x.size() / b;
  std::vector<double> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto lo = static_cast<std::int64_t>(i * b);
    out[i] = mean(slice(x, RangeSpec::to(lo, lo + static_cast<std::int64_t>(b) - 1)));
  }
  return NumVector(std::move(out));
}

double batch_acf(const NumVector& means) {
  try {
    return autocorrelation(means);
  } catch (const DegenerateInputError&) {
    if (means.size() < 3) throw;
    return 0.0;
  }
}

FormedBatches form_batches(SampleSource& src, const BatchConfig& cfg) {
  cfg.validate();
  BatchRun run(src, cfg);
  run.start();
  run.double_until_decorrelated();
  return run.formed();
}

BatchReport run_batch_means(SampleSource& src, const BatchConfig& cfg) {
  cfg.validate();
  BatchRun run(src, cfg);
  run.start();
  do {
    run.double_until_decorrelated();
    run.refine_precision();
  } while (!run.decorrelated());
  return run.report();
}

}  // namespace simstat
