#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simstat/numvec.hpp"
#include "simstat/rng.hpp"

namespace simstat {

enum class Kind {
  Bernoulli,
  Beta,
  Binomial,
  Cauchy,
  ChiSquare,
  Deterministic,
  Discrete,
  Erlang,
  Exponential,
  Fisher,
  Gamma,
  Geometric,
  HyperExponential,
  HyperGeometric,
  LogNormal,
  NegativeBinomial,
  Normal,
  Poisson,
  Randi,
  Random,
  StudentT,
  Triangular,
  TruncatedNormal,
  Uniform,
  Weibull,
};

inline constexpr std::size_t kKindCount = 25;

/// Canonical lower-case name, as accepted by `parse_distribution`.
std::string_view kind_name(Kind kind);
std::optional<Kind> kind_from_name(std::string_view name);
/// All kinds in declaration order.
const std::vector<Kind>& all_kinds();

/// Immutable, validated distribution descriptor.
///
/// Parameterizations:
///   Bernoulli(p)  Beta(α, β)  Binomial(n, p)  Cauchy(location, scale)
///   ChiSquare(k)  Deterministic(c)  Discrete(values, pmf)  Erlang(k, rate)
///   Exponential(mean)  Fisher(d1, d2)  Gamma(shape, scale)
///   Geometric(p): failures before the first success, support {0, 1, ...}
///   HyperExponential(probabilities, means)  HyperGeometric(population, successes, draws)
///   LogNormal(μ, σ²) of the underlying normal  NegativeBinomial(r, p): failures before r-th success
///   Normal(mean, variance)  Poisson(λ ≤ 700)  Randi(lo, hi) inclusive  Random = Uniform(0, 1)
///   StudentT(ν)  Triangular(a, b, mode)  TruncatedNormal(mean, variance, lo, hi)
///   Uniform(a, b)  Weibull(shape, scale)
class Distribution {
 public:
  static Distribution bernoulli(double p);
  static Distribution beta(double alpha, double beta);
  static Distribution binomial(double n, double p);
  static Distribution cauchy(double location, double scale);
  static Distribution chi_square(double k);
  static Distribution deterministic(double c);
  static Distribution discrete(std::vector<double> values, std::vector<double> pmf);
  static Distribution erlang(double k, double rate);
  static Distribution exponential(double mean);
  static Distribution fisher(double d1, double d2);
  static Distribution gamma(double shape, double scale);
  static Distribution geometric(double p);
  static Distribution hyper_exponential(std::vector<double> probabilities, std::vector<double> means);
  static Distribution hyper_geometric(double population, double successes, double draws);
  static Distribution log_normal(double mu, double sigma2);
  static Distribution negative_binomial(double r, double p);
  static Distribution normal(double mean, double variance);
  static Distribution poisson(double lambda);
  static Distribution randi(double lo, double hi);
  static Distribution random();
  static Distribution student_t(double nu);
  static Distribution triangular(double a, double b, double mode);
  static Distribution truncated_normal(double mean, double variance, double lo, double hi);
  static Distribution uniform(double a, double b);
  static Distribution weibull(double shape, double scale);

  /// Generic construction from a flat parameter list (the CLI form).
  /// Discrete takes the pmf over support {0, ..., k-1}; HyperExponential takes p1, m1, p2, m2, ...
  static Distribution from_params(Kind kind, const std::vector<double>& params);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::vector<double>& params() const noexcept { return params_; }
  /// Atoms (Discrete) or mixture means (HyperExponential).
  [[nodiscard]] const std::vector<double>& values() const noexcept { return values_; }
  /// Probabilities matching `values()`.
  [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }
  [[nodiscard]] bool is_discrete() const noexcept;
  /// Closed support interval (may be infinite).
  [[nodiscard]] std::pair<double, double> support() const;
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Distribution(Kind kind, std::vector<double> params) : kind_(kind), params_(std::move(params)) {}

  Kind kind_;
  std::vector<double> params_;
  std::vector<double> values_;
  std::vector<double> weights_;
};

/// Parses `kind:p1,p2,...`, e.g. `normal:0,1`, `exponential:2`, `triangular:0,10,3`.
/// Throws ConstructionError naming the kind and expected parameter count on a bad spec.
Distribution parse_distribution(std::string_view spec);

double draw(const Distribution& d, RandomStream& s);
NumVector random_vector(const Distribution& d, std::size_t n, RandomStream& s);

/// Throws UndefinedMomentError where the moment does not exist.
double theoretical_mean(const Distribution& d);
double theoretical_variance(const Distribution& d);

double cdf(const Distribution& d, double x);
/// Density (continuous kinds) or probability mass (discrete kinds).
double pdf(const Distribution& d, double x);
/// Quantile of a continuous kind, |cdf(x) - p| ≤ 1e-10. Throws DomainError unless 0 < p < 1.
double inverse_cdf(const Distribution& d, double p);

}  // namespace simstat
