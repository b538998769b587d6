#include "simstat/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simstat/errors.hpp"
#include "simstat/variate.hpp"

namespace simstat {

namespace {

using Wide = long double;

void require_nonempty(const NumVector& x, const char* what) {
  if (x.empty()) throw EmptyInputError(std::string(what) + ": empty input");
}

// Raw moments about a shift K. The shortcut forms below (ms − μ², μ(xy) − μxμy, ...)
// are translation invariant, so evaluating them on x − K is algebraically identical
// while keeping constant data exact. K is the first element.
struct Moments {
  Wide m1 = 0;  // μ(x − K)
  Wide m2 = 0;  // μ((x − K)²)
  Wide m3 = 0;  // μ((x − K)³)
};

Moments shifted_moments(const NumVector& x) {
  const Wide k = x[0];
  Wide s1 = 0;
  Wide s2 = 0;
  Wide s3 = 0;
  for (double v : x) {
    const Wide d = static_cast<Wide>(v) - k;
    s1 += d;
    s2 += d * d;
    s3 += d * d * d;
  }
  const Wide n = static_cast<Wide>(x.size());
  return {s1 / n, s2 / n, s3 / n};
}

Wide clamp_variance(Wide v, Wide scale, const char* what) {
  if (v >= 0) return v;
  if (v >= -1e-12L * std::max<Wide>(1, scale)) return 0;
  throw NumericError(std::string(what) + ": negative variance from cancellation");
}

Wide variance_of(const Moments& m) {
  return clamp_variance(m.m2 - m.m1 * m.m1, m.m2, "variance");
}

}  // namespace

double mean(const NumVector& x) {
  require_nonempty(x, "mean");
  Wide sum = 0;
  for (double v : x) sum += v;
  return static_cast<double>(sum / static_cast<Wide>(x.size()));
}

double mean_square(const NumVector& x) {
  require_nonempty(x, "meanSquare");
  Wide sum = 0;
  for (double v : x) sum += static_cast<Wide>(v) * v;
  return static_cast<double>(sum / static_cast<Wide>(x.size()));
}

double pop_variance(const NumVector& x) {
  require_nonempty(x, "popVariance");
  return static_cast<double>(variance_of(shifted_moments(x)));
}

double sample_variance(const NumVector& x) {
  if (x.size() < 2) throw DegenerateInputError("sampleVariance: needs at least 2 observations");
  const Wide n = static_cast<Wide>(x.size());
  return static_cast<double>(n * variance_of(shifted_moments(x)) / (n - 1));
}

double std_dev(const NumVector& x) { return std::sqrt(pop_variance(x)); }

double skewness(const NumVector& x) {
  require_nonempty(x, "skewness");
  const auto m = shifted_moments(x);
  const Wide var = variance_of(m);
  if (var == 0) throw DegenerateInputError("skewness: zero variance");
  const Wide mu = m.m1;
  const Wide sigma = std::sqrt(var);
  return static_cast<double>((m.m3 - 3 * mu * var - mu * mu * mu) / (sigma * sigma * sigma));
}

namespace {

struct PairMoments {
  Wide cov;
  Wide var_x;
  Wide var_y;
};

PairMoments pair_moments(const NumVector& x, const NumVector& y, const char* what) {
  if (x.size() != y.size()) throw DimensionError(std::string(what) + ": length mismatch");
  require_nonempty(x, what);
  const Wide kx = x[0];
  const Wide ky = y[0];
  Wide sx = 0;
  Wide sy = 0;
  Wide sxx = 0;
  Wide syy = 0;
  Wide sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Wide dx = static_cast<Wide>(x[i]) - kx;
    const Wide dy = static_cast<Wide>(y[i]) - ky;
    sx += dx;
    sy += dy;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  const Wide n = static_cast<Wide>(x.size());
  const Wide mx = sx / n;
  const Wide my = sy / n;
  return {sxy / n - mx * my, clamp_variance(sxx / n - mx * mx, sxx / n, what),
          clamp_variance(syy / n - my * my, syy / n, what)};
}

}  // namespace

double covariance(const NumVector& x, const NumVector& y) {
  return static_cast<double>(pair_moments(x, y, "covariance").cov);
}

double correlation(const NumVector& x, const NumVector& y) {
  const auto m = pair_moments(x, y, "correlation");
  if (m.var_x == 0 || m.var_y == 0) throw DegenerateInputError("correlation: zero variance");
  const Wide rho = m.cov / (std::sqrt(m.var_x) * std::sqrt(m.var_y));
  return static_cast<double>(std::clamp<Wide>(rho, -1, 1));
}

double autocorrelation(const NumVector& x) {
  const std::size_t n = x.size();
  if (n < 3) throw DegenerateInputError("autocorrelation: needs at least 3 observations");
  const auto last = static_cast<std::int64_t>(n) - 1;
  return correlation(slice(x, RangeSpec::to(0, last - 1)), slice(x, RangeSpec::to(1, last)));
}

double interval_half_width(const NumVector& x, double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) throw DomainError("interval: confidence must lie in (0, 1)");
  const double var = sample_variance(x);
  if (var == 0.0) return 0.0;
  const double n = static_cast<double>(x.size());
  const double alpha = 1.0 - confidence;
  const double t = inverse_cdf(Distribution::student_t(n - 1.0), 1.0 - alpha / 2.0);
  return t * std::sqrt(var / n);
}

SummaryStats summarize(const NumVector& x) {
  SummaryStats s;
  s.n = x.size();
  s.mean = mean(x);
  s.mean_square = mean_square(x);
  s.pop_variance = pop_variance(x);
  s.std_dev = std::sqrt(s.pop_variance);
  if (x.size() >= 2) s.sample_variance = sample_variance(x);
  if (s.pop_variance > 0.0) s.skewness = skewness(x);
  return s;
}

}  // namespace simstat
