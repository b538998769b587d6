#pragma once

#include <cstddef>
#include <optional>

#include "simstat/numvec.hpp"

namespace simstat {

/// Population summary of a sample. Reductions follow the moment forms
/// μ, ms = μ(x²), σ² = ms − μ², σ̂² = nσ²/(n−1), σ = √σ², and γ1.
struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  double mean_square = 0.0;
  double pop_variance = 0.0;
  std::optional<double> sample_variance;  // empty for n = 1
  double std_dev = 0.0;
  std::optional<double> skewness;  // empty when pop_variance = 0
};

/// Σxᵢ/n. Throws EmptyInputError on an empty vector.
double mean(const NumVector& x);
/// μ(x²)
double mean_square(const NumVector& x);
/// σ² = ms − μ², accumulated in extended precision. Tiny negatives (≥ −1e-12)
/// clamp to zero; anything below raises NumericError.
double pop_variance(const NumVector& x);
/// n·σ²/(n−1); needs n ≥ 2.
double sample_variance(const NumVector& x);
double std_dev(const NumVector& x);
/// (μ(x³) − 3μσ² − μ³)/σ³; DegenerateInputError when σ² = 0.
double skewness(const NumVector& x);
/// μ(xy) − μ(x)μ(y), population form.
double covariance(const NumVector& x, const NumVector& y);
/// Pearson ρ = cov/(σxσy), clamped to [−1, 1].
double correlation(const NumVector& x, const NumVector& y);
/// Lag-1: ρ(x[0..n−2], x[1..n−1]). Needs n ≥ 3 and non-constant slices.
double autocorrelation(const NumVector& x);
/// t_{1−α/2, n−1}·√(σ̂²/n), α = 1 − confidence.
double interval_half_width(const NumVector& x, double confidence = 0.95);

/// All of SummaryStats in one pass over the reductions above.
SummaryStats summarize(const NumVector& x);

}  // namespace simstat
