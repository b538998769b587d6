#pragma once

// Slow, obvious reference implementations used only by the tests. Nothing
// here calls into the simstat library.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace oracle {

struct OracleResult {
  double value = 0.0;
  std::string method;
};

// Deviation-form moments (two-pass, population normalization).
OracleResult deviation_mean(std::span<const double> x);
OracleResult deviation_variance(std::span<const double> x);
OracleResult deviation_skewness(std::span<const double> x);
OracleResult deviation_covariance(std::span<const double> x, std::span<const double> y);
OracleResult pearson_direct(std::span<const double> x, std::span<const double> y);
/// Lag-1 autocorrelation as Pearson correlation of the two overlapping slices.
OracleResult lag1_direct(std::span<const double> x);

struct DeviationAnova {
  double grand_mean;
  double sst;  // ΣΣ (x − gμ)²
  double ssb;  // n Σ (row mean − gμ)²
  double ssw;  // ΣΣ (x − row mean)²
  double f;
};
DeviationAnova deviation_anova(const std::vector<std::vector<double>>& rows);

/// Two-sample t with pooled variance.
OracleResult pooled_t(std::span<const double> a, std::span<const double> b);

/// Direct per-batch averaging; trailing partial batch dropped.
std::vector<double> brute_batch_means(std::span<const double> x, std::size_t b);

/// M/M/1 steady-state mean wait in queue, λ/(μ(μ − λ)).
OracleResult mm1_expected_wait(double lambda, double mu);

/// Adaptive Gauss–Legendre quadrature of f over [a, b].
double quadrature(double (*f)(double, const std::vector<double>&), const std::vector<double>& params, double a,
                  double b, double tol = 1e-13);

/// CDF by quadrature of the closed-form density. `kind` is one of
/// normal(mean, variance), student_t(ν), fisher(d1, d2), chi_square(k),
/// exponential(mean), gamma(shape, scale).
OracleResult reference_cdf(const std::string& kind, const std::vector<double>& params, double x);

}  // namespace oracle
