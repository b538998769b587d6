#include "simstat/variate.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>

#include "simstat/errors.hpp"
#include "simstat/funcs.hpp"
#include "simstat/special.hpp"

namespace simstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct KindInfo {
  Kind kind;
  std::string_view name;
  int arity;  // -1: variable
  std::string_view params;
};

constexpr std::array<KindInfo, kKindCount> kKinds = {{
    {Kind::Bernoulli, "bernoulli", 1, "p"},
    {Kind::Beta, "beta", 2, "alpha, beta"},
    {Kind::Binomial, "binomial", 2, "n, p"},
    {Kind::Cauchy, "cauchy", 2, "location, scale"},
    {Kind::ChiSquare, "chisquare", 1, "k"},
    {Kind::Deterministic, "deterministic", 1, "c"},
    {Kind::Discrete, "discrete", -1, "p0, p1, ..."},
    {Kind::Erlang, "erlang", 2, "k, rate"},
    {Kind::Exponential, "exponential", 1, "mean"},
    {Kind::Fisher, "fisher", 2, "d1, d2"},
    {Kind::Gamma, "gamma", 2, "shape, scale"},
    {Kind::Geometric, "geometric", 1, "p"},
    {Kind::HyperExponential, "hyperexponential", -1, "p1, mean1, p2, mean2, ..."},
    {Kind::HyperGeometric, "hypergeometric", 3, "population, successes, draws"},
    {Kind::LogNormal, "lognormal", 2, "mu, sigma2"},
    {Kind::NegativeBinomial, "negativebinomial", 2, "r, p"},
    {Kind::Normal, "normal", 2, "mean, variance"},
    {Kind::Poisson, "poisson", 1, "lambda"},
    {Kind::Randi, "randi", 2, "lo, hi"},
    {Kind::Random, "random", 0, ""},
    {Kind::StudentT, "studentt", 1, "nu"},
    {Kind::Triangular, "triangular", 3, "a, b, mode"},
    {Kind::TruncatedNormal, "truncatednormal", 4, "mean, variance, lo, hi"},
    {Kind::Uniform, "uniform", 2, "a, b"},
    {Kind::Weibull, "weibull", 2, "shape, scale"},
}};

const KindInfo& info(Kind kind) { return kKinds[static_cast<std::size_t>(kind)]; }

[[noreturn]] void invalid(Kind kind, const std::string& why) {
  throw ConstructionError(std::string(info(kind).name) + ": " + why);
}

void require(bool ok, Kind kind, const char* why) {
  if (!ok) invalid(kind, why);
}

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

void require_finite(Kind kind, std::initializer_list<double> xs) {
  for (double x : xs) require(std::isfinite(x), kind, "parameters must be finite");
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

double log_choose(double n, double k) {
  return log_gamma(n + 1.0) - log_gamma(k + 1.0) - log_gamma(n - k + 1.0);
}

// ---- sampling primitives -------------------------------------------------

// Marsaglia polar method; the second variate of each accepted pair is discarded.
double standard_normal(RandomStream& s) {
  for (;;) {
    const double v1 = 2.0 * s.next_uniform() - 1.0;
    const double v2 = 2.0 * s.next_uniform() - 1.0;
    const double w = v1 * v1 + v2 * v2;
    if (w > 0.0 && w < 1.0) return v1 * std::sqrt(-2.0 * std::log(w) / w);
  }
}

double exponential_draw(double mean, RandomStream& s) { return -mean * std::log1p(-s.next_uniform()); }

// Marsaglia–Tsang for shape ≥ 1; shape < 1 boosted through Gamma(shape + 1)·u^(1/shape).
double gamma_draw(double shape, double scale, RandomStream& s) {
  if (shape < 1.0) {
    const double boosted = gamma_draw(shape + 1.0, 1.0, s);
    return scale * boosted * std::pow(s.next_uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = standard_normal(s);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = s.next_uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
  }
}

double chi_square_draw(double k, RandomStream& s) { return gamma_draw(0.5 * k, 2.0, s); }

double geometric_draw(double p, RandomStream& s) {
  if (p >= 1.0) return 0.0;
  return std::floor(std::log(s.next_uniform()) / std::log1p(-p));
}

double open_unit(double x) {
  if (x <= 0.0) return std::nextafter(0.0, 1.0);
  if (x >= 1.0) return std::nextafter(1.0, 0.0);
  return x;
}

double open_interval(double x, double a, double b) {
  if (x <= a) return std::nextafter(a, b);
  if (x >= b) return std::nextafter(b, a);
  return x;
}

// ---- moments helpers -------------------------------------------------------

struct TruncMoments {
  double alpha, beta, mass, phi_a, phi_b;
};

double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

TruncMoments trunc_moments(double mu, double sd, double lo, double hi) {
  const double a = (lo - mu) / sd;
  const double b = (hi - mu) / sd;
  return {a, b, special::normal_cdf(b) - special::normal_cdf(a), std_normal_pdf(a), std_normal_pdf(b)};
}

}  // namespace

std::string_view kind_name(Kind kind) { return info(kind).name; }

std::optional<Kind> kind_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::erase(lower, '_');
  for (const auto& k : kKinds) {
    if (k.name == lower) return k.kind;
  }
  return std::nullopt;
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = [] {
    std::vector<Kind> out;
    for (const auto& k : kKinds) out.push_back(k.kind);
    return out;
  }();
  return kinds;
}

// ---- construction ----------------------------------------------------------

Distribution Distribution::bernoulli(double p) {
  require(p >= 0.0 && p <= 1.0, Kind::Bernoulli, "p must lie in [0, 1]");
  return {Kind::Bernoulli, {p}};
}

Distribution Distribution::beta(double alpha, double beta) {
  require_finite(Kind::Beta, {alpha, beta});
  require(alpha > 0.0 && beta > 0.0, Kind::Beta, "shape parameters must be positive");
  return {Kind::Beta, {alpha, beta}};
}

Distribution Distribution::binomial(double n, double p) {
  require(is_integer(n) && n >= 0.0, Kind::Binomial, "n must be a non-negative integer");
  require(n <= 10000.0, Kind::Binomial, "n must not exceed 10000");
  require(p >= 0.0 && p <= 1.0, Kind::Binomial, "p must lie in [0, 1]");
  return {Kind::Binomial, {n, p}};
}

Distribution Distribution::cauchy(double location, double scale) {
  require_finite(Kind::Cauchy, {location, scale});
  require(scale > 0.0, Kind::Cauchy, "scale must be positive");
  return {Kind::Cauchy, {location, scale}};
}

Distribution Distribution::chi_square(double k) {
  require(std::isfinite(k) && k > 0.0, Kind::ChiSquare, "degrees of freedom must be positive");
  return {Kind::ChiSquare, {k}};
}

Distribution Distribution::deterministic(double c) {
  require_finite(Kind::Deterministic, {c});
  return {Kind::Deterministic, {c}};
}

Distribution Distribution::discrete(std::vector<double> values, std::vector<double> pmf) {
  require(!values.empty(), Kind::Discrete, "at least one atom is required");
  require(values.size() == pmf.size(), Kind::Discrete, "values and pmf must have equal length");
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]), Kind::Discrete, "values must be finite");
    require(std::isfinite(pmf[i]) && pmf[i] >= 0.0, Kind::Discrete, "masses must be non-negative");
    total += pmf[i];
  }
  require(std::abs(total - 1.0) <= 1e-9, Kind::Discrete, "pmf must sum to 1");
  Distribution d(Kind::Discrete, pmf);
  d.values_ = std::move(values);
  d.weights_ = std::move(pmf);
  return d;
}

Distribution Distribution::erlang(double k, double rate) {
  require(is_integer(k) && k >= 1.0, Kind::Erlang, "k must be a positive integer");
  require(std::isfinite(rate) && rate > 0.0, Kind::Erlang, "rate must be positive");
  return {Kind::Erlang, {k, rate}};
}

Distribution Distribution::exponential(double mean) {
  require(std::isfinite(mean) && mean > 0.0, Kind::Exponential, "mean must be positive");
  return {Kind::Exponential, {mean}};
}

Distribution Distribution::fisher(double d1, double d2) {
  require_finite(Kind::Fisher, {d1, d2});
  require(d1 > 0.0 && d2 > 0.0, Kind::Fisher, "degrees of freedom must be positive");
  return {Kind::Fisher, {d1, d2}};
}

Distribution Distribution::gamma(double shape, double scale) {
  require_finite(Kind::Gamma, {shape, scale});
  require(shape > 0.0 && scale > 0.0, Kind::Gamma, "shape and scale must be positive");
  return {Kind::Gamma, {shape, scale}};
}

Distribution Distribution::geometric(double p) {
  require(p > 0.0 && p <= 1.0, Kind::Geometric, "p must lie in (0, 1]");
  return {Kind::Geometric, {p}};
}

Distribution Distribution::hyper_exponential(std::vector<double> probabilities, std::vector<double> means) {
  require(!probabilities.empty(), Kind::HyperExponential, "at least one phase is required");
  require(probabilities.size() == means.size(), Kind::HyperExponential,
          "probabilities and means must have equal length");
  double total = 0.0;
  std::vector<double> flat;
  for (std::size_t i = 0; i < means.size(); ++i) {
    require(std::isfinite(probabilities[i]) && probabilities[i] >= 0.0, Kind::HyperExponential,
            "probabilities must be non-negative");
    require(std::isfinite(means[i]) && means[i] > 0.0, Kind::HyperExponential, "means must be positive");
    total += probabilities[i];
    flat.push_back(probabilities[i]);
    flat.push_back(means[i]);
  }
  require(std::abs(total - 1.0) <= 1e-9, Kind::HyperExponential, "probabilities must sum to 1");
  Distribution d(Kind::HyperExponential, std::move(flat));
  d.values_ = std::move(means);
  d.weights_ = std::move(probabilities);
  return d;
}

Distribution Distribution::hyper_geometric(double population, double successes, double draws) {
  require(is_integer(population) && is_integer(successes) && is_integer(draws), Kind::HyperGeometric,
          "parameters must be integers");
  require(population >= 1.0, Kind::HyperGeometric, "population must be positive");
  require(successes >= 0.0 && successes <= population, Kind::HyperGeometric,
          "successes must lie in [0, population]");
  require(draws >= 0.0 && draws <= population, Kind::HyperGeometric, "draws must lie in [0, population]");
  return {Kind::HyperGeometric, {population, successes, draws}};
}

Distribution Distribution::log_normal(double mu, double sigma2) {
  require_finite(Kind::LogNormal, {mu, sigma2});
  require(sigma2 > 0.0, Kind::LogNormal, "variance must be positive");
  return {Kind::LogNormal, {mu, sigma2}};
}

Distribution Distribution::negative_binomial(double r, double p) {
  require(is_integer(r) && r >= 1.0, Kind::NegativeBinomial, "r must be a positive integer");
  require(r <= 10000.0, Kind::NegativeBinomial, "r must not exceed 10000");
  require(p > 0.0 && p <= 1.0, Kind::NegativeBinomial, "p must lie in (0, 1]");
  return {Kind::NegativeBinomial, {r, p}};
}

Distribution Distribution::normal(double mean, double variance) {
  require_finite(Kind::Normal, {mean, variance});
  require(variance > 0.0, Kind::Normal, "variance must be positive");
  return {Kind::Normal, {mean, variance}};
}

Distribution Distribution::poisson(double lambda) {
  require(std::isfinite(lambda) && lambda > 0.0, Kind::Poisson, "lambda must be positive");
  require(lambda <= 700.0, Kind::Poisson, "lambda must not exceed 700");
  return {Kind::Poisson, {lambda}};
}

Distribution Distribution::randi(double lo, double hi) {
  require(is_integer(lo) && is_integer(hi), Kind::Randi, "bounds must be integers");
  require(lo <= hi, Kind::Randi, "lo must not exceed hi");
  return {Kind::Randi, {lo, hi}};
}

Distribution Distribution::random() { return {Kind::Random, {}}; }

Distribution Distribution::student_t(double nu) {
  require(std::isfinite(nu) && nu > 0.0, Kind::StudentT, "degrees of freedom must be positive");
  return {Kind::StudentT, {nu}};
}

Distribution Distribution::triangular(double a, double b, double mode) {
  require_finite(Kind::Triangular, {a, b, mode});
  require(a < b, Kind::Triangular, "a must be less than b");
  require(a <= mode && mode <= b, Kind::Triangular, "mode must lie in [a, b]");
  return {Kind::Triangular, {a, b, mode}};
}

Distribution Distribution::truncated_normal(double mean, double variance, double lo, double hi) {
  require_finite(Kind::TruncatedNormal, {mean, variance, lo, hi});
  require(variance > 0.0, Kind::TruncatedNormal, "variance must be positive");
  require(lo < hi, Kind::TruncatedNormal, "lo must be less than hi");
  const auto t = trunc_moments(mean, std::sqrt(variance), lo, hi);
  require(t.mass >= 1e-6, Kind::TruncatedNormal, "acceptance region probability below 1e-6");
  return {Kind::TruncatedNormal, {mean, variance, lo, hi}};
}

Distribution Distribution::uniform(double a, double b) {
  require_finite(Kind::Uniform, {a, b});
  require(a < b, Kind::Uniform, "a must be less than b");
  return {Kind::Uniform, {a, b}};
}

Distribution Distribution::weibull(double shape, double scale) {
  require_finite(Kind::Weibull, {shape, scale});
  require(shape > 0.0 && scale > 0.0, Kind::Weibull, "shape and scale must be positive");
  return {Kind::Weibull, {shape, scale}};
}

Distribution Distribution::from_params(Kind kind, const std::vector<double>& p) {
  const auto& ki = info(kind);
  if (ki.arity >= 0 && static_cast<int>(p.size()) != ki.arity) {
    throw ConstructionError(std::string(ki.name) + " expects " + std::to_string(ki.arity) + " parameter" +
                            (ki.arity == 1 ? "" : "s") + (ki.arity ? " (" + std::string(ki.params) + ")" : "") +
                            ", got " + std::to_string(p.size()));
  }
  switch (kind) {
    case Kind::Bernoulli: return bernoulli(p[0]);
    case Kind::Beta: return beta(p[0], p[1]);
    case Kind::Binomial: return binomial(p[0], p[1]);
    case Kind::Cauchy: return cauchy(p[0], p[1]);
    case Kind::ChiSquare: return chi_square(p[0]);
    case Kind::Deterministic: return deterministic(p[0]);
    case Kind::Discrete: {
      if (p.empty()) throw ConstructionError("discrete expects at least 1 parameter (p0, p1, ...), got 0");
      std::vector<double> support(p.size());
      std::iota(support.begin(), support.end(), 0.0);
      return discrete(std::move(support), p);
    }
    case Kind::Erlang: return erlang(p[0], p[1]);
    case Kind::Exponential: return exponential(p[0]);
    case Kind::Fisher: return fisher(p[0], p[1]);
    case Kind::Gamma: return gamma(p[0], p[1]);
    case Kind::Geometric: return geometric(p[0]);
    case Kind::HyperExponential: {
      if (p.empty() || p.size() % 2 != 0) {
        throw ConstructionError("hyperexponential expects an even number of parameters (" +
                                std::string(ki.params) + "), got " + std::to_string(p.size()));
      }
      std::vector<double> probs;
      std::vector<double> means;
      for (std::size_t i = 0; i < p.size(); i += 2) {
        probs.push_back(p[i]);
        means.push_back(p[i + 1]);
      }
      return hyper_exponential(std::move(probs), std::move(means));
    }
    case Kind::HyperGeometric: return hyper_geometric(p[0], p[1], p[2]);
    case Kind::LogNormal: return log_normal(p[0], p[1]);
    case Kind::NegativeBinomial: return negative_binomial(p[0], p[1]);
    case Kind::Normal: return normal(p[0], p[1]);
    case Kind::Poisson: return poisson(p[0]);
    case Kind::Randi: return randi(p[0], p[1]);
    case Kind::Random: return random();
    case Kind::StudentT: return student_t(p[0]);
    case Kind::Triangular: return triangular(p[0], p[1], p[2]);
    case Kind::TruncatedNormal: return truncated_normal(p[0], p[1], p[2], p[3]);
    case Kind::Uniform: return uniform(p[0], p[1]);
    case Kind::Weibull: return weibull(p[0], p[1]);
  }
  throw ConstructionError("unknown distribution kind");
}

bool Distribution::is_discrete() const noexcept {
  switch (kind_) {
    case Kind::Bernoulli:
    case Kind::Binomial:
    case Kind::Deterministic:
    case Kind::Discrete:
    case Kind::Geometric:
    case Kind::HyperGeometric:
    case Kind::NegativeBinomial:
    case Kind::Poisson:
    case Kind::Randi:
      return true;
    default:
      return false;
  }
}

std::pair<double, double> Distribution::support() const {
  const auto& p = params_;
  switch (kind_) {
    case Kind::Bernoulli: return {0.0, 1.0};
    case Kind::Beta: return {0.0, 1.0};
    case Kind::Binomial: return {0.0, p[0]};
    case Kind::Cauchy: return {-kInf, kInf};
    case Kind::ChiSquare: return {0.0, kInf};
    case Kind::Deterministic: return {p[0], p[0]};
    case Kind::Discrete: {
      const auto [lo, hi] = std::minmax_element(values_.begin(), values_.end());
      return {*lo, *hi};
    }
    case Kind::Erlang: return {0.0, kInf};
    case Kind::Exponential: return {0.0, kInf};
    case Kind::Fisher: return {0.0, kInf};
    case Kind::Gamma: return {0.0, kInf};
    case Kind::Geometric: return {0.0, kInf};
    case Kind::HyperExponential: return {0.0, kInf};
    case Kind::HyperGeometric:
      return {std::max(0.0, p[2] - (p[0] - p[1])), std::min(p[1], p[2])};
    case Kind::LogNormal: return {0.0, kInf};
    case Kind::NegativeBinomial: return {0.0, kInf};
    case Kind::Normal: return {-kInf, kInf};
    case Kind::Poisson: return {0.0, kInf};
    case Kind::Randi: return {p[0], p[1]};
    case Kind::Random: return {0.0, 1.0};
    case Kind::StudentT: return {-kInf, kInf};
    case Kind::Triangular: return {p[0], p[1]};
    case Kind::TruncatedNormal: return {p[2], p[3]};
    case Kind::Uniform: return {p[0], p[1]};
    case Kind::Weibull: return {0.0, kInf};
  }
  return {-kInf, kInf};
}

std::string Distribution::describe() const {
  std::string out(kind_name(kind_));
  out += '(';
  for (std::size_t i = 0; i < params_.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", params_[i]);
    if (i) out += ", ";
    out += buf;
  }
  out += ')';
  return out;
}

Distribution parse_distribution(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const auto kind = kind_from_name(name);
  if (!kind) throw ConstructionError("unknown distribution kind '" + std::string(name) + "'");
  std::vector<double> params;
  if (colon != std::string_view::npos) {
    auto rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      auto field = rest.substr(0, comma);
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
      while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value)) {
        throw ConstructionError(std::string(kind_name(*kind)) + ": invalid parameter '" + std::string(field) + "'");
      }
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
      if (rest.empty()) {
        throw ConstructionError(std::string(kind_name(*kind)) + ": trailing comma in parameter list");
      }
    }
  }
  return Distribution::from_params(*kind, params);
}

// ---- sampling --------------------------------------------------------------

double draw(const Distribution& d, RandomStream& s) {
  const auto& p = d.params();
  switch (d.kind()) {
    case Kind::Bernoulli: return s.next_uniform() < p[0] ? 1.0 : 0.0;
    case Kind::Beta: {
      const double x = gamma_draw(p[0], 1.0, s);
      const double y = gamma_draw(p[1], 1.0, s);
      return open_unit(x / (x + y));
    }
    case Kind::Binomial: {
      double successes = 0.0;
      for (double i = 0.0; i < p[0]; i += 1.0) {
        if (s.next_uniform() < p[1]) successes += 1.0;
      }
      return successes;
    }
    case Kind::Cauchy: return p[0] + p[1] * std::tan(std::numbers::pi * (s.next_uniform() - 0.5));
    case Kind::ChiSquare: return chi_square_draw(p[0], s);
    case Kind::Deterministic: return p[0];
    case Kind::Discrete: {
      const double u = s.next_uniform();
      const auto& values = d.values();
      const auto& weights = d.weights();
      double cumulative = 0.0;
      std::size_t last = 0;
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        last = i;
        cumulative += weights[i];
        if (u <= cumulative) return values[i];
      }
      return values[last];
    }
    case Kind::Erlang: {
      double sum = 0.0;
      for (double i = 0.0; i < p[0]; i += 1.0) sum += exponential_draw(1.0 / p[1], s);
      return sum;
    }
    case Kind::Exponential: return exponential_draw(p[0], s);
    case Kind::Fisher: {
      const double x = chi_square_draw(p[0], s) / p[0];
      const double y = chi_square_draw(p[1], s) / p[1];
      return x / y;
    }
    case Kind::Gamma: return gamma_draw(p[0], p[1], s);
    case Kind::Geometric: return geometric_draw(p[0], s);
    case Kind::HyperExponential: {
      const double u = s.next_uniform();
      const auto& means = d.values();
      const auto& probs = d.weights();
      double cumulative = 0.0;
      std::size_t phase = 0;
      for (std::size_t i = 0; i < means.size(); ++i) {
        if (probs[i] <= 0.0) continue;
        phase = i;
        cumulative += probs[i];
        if (u <= cumulative) break;
      }
      return exponential_draw(means[phase], s);
    }
    case Kind::HyperGeometric: {
      double remaining = p[0];
      double good = p[1];
      double hits = 0.0;
      for (double i = 0.0; i < p[2]; i += 1.0) {
        if (s.next_uniform() < good / remaining) {
          hits += 1.0;
          good -= 1.0;
        }
        remaining -= 1.0;
      }
      return hits;
    }
    case Kind::LogNormal: return std::exp(p[0] + std::sqrt(p[1]) * standard_normal(s));
    case Kind::NegativeBinomial: {
      double failures = 0.0;
      for (double i = 0.0; i < p[0]; i += 1.0) failures += geometric_draw(p[1], s);
      return failures;
    }
    case Kind::Normal: return p[0] + std::sqrt(p[1]) * standard_normal(s);
    case Kind::Poisson: {
      const double limit = std::exp(-p[0]);
      double k = 0.0;
      double product = s.next_uniform();
      while (product > limit) {
        k += 1.0;
        product *= s.next_uniform();
      }
      return k;
    }
    case Kind::Randi: {
      const double width = p[1] - p[0] + 1.0;
      return std::min(p[1], p[0] + std::floor(s.next_uniform() * width));
    }
    case Kind::Random: return s.next_uniform();
    case Kind::StudentT: return standard_normal(s) / std::sqrt(chi_square_draw(p[0], s) / p[0]);
    case Kind::Triangular: {
      const double a = p[0];
      const double b = p[1];
      const double c = p[2];
      const double u = s.next_uniform();
      const double split = (c - a) / (b - a);
      const double x = u < split ? a + std::sqrt(u * (b - a) * (c - a))
                                 : b - std::sqrt((1.0 - u) * (b - a) * (b - c));
      return std::clamp(x, a, b);
    }
    case Kind::TruncatedNormal: {
      const double sd = std::sqrt(p[1]);
      for (;;) {
        const double x = p[0] + sd * standard_normal(s);
        if (x >= p[2] && x <= p[3]) return x;
      }
    }
    case Kind::Uniform: return open_interval(p[0] + (p[1] - p[0]) * s.next_uniform(), p[0], p[1]);
    case Kind::Weibull: return p[1] * std::pow(-std::log1p(-s.next_uniform()), 1.0 / p[0]);
  }
  throw ConstructionError("unknown distribution kind");
}

NumVector random_vector(const Distribution& d, std::size_t n, RandomStream& s) {
  std::vector<double> out(n);
  for (auto& x : out) x = draw(d, s);
  return NumVector(std::move(out));
}

// ---- moments ---------------------------------------------------------------

double theoretical_mean(const Distribution& d) {
  const auto& p = d.params();
  switch (d.kind()) {
    case Kind::Bernoulli: return p[0];
    case Kind::Beta: return p[0] / (p[0] + p[1]);
    case Kind::Binomial: return p[0] * p[1];
    case Kind::Cauchy: throw UndefinedMomentError("cauchy: mean is undefined");
    case Kind::ChiSquare: return p[0];
    case Kind::Deterministic: return p[0];
    case Kind::Discrete: {
      double m = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) m += d.values()[i] * d.weights()[i];
      return m;
    }
    case Kind::Erlang: return p[0] / p[1];
    case Kind::Exponential: return p[0];
    case Kind::Fisher:
      if (p[1] <= 2.0) throw UndefinedMomentError("fisher: mean requires d2 > 2");
      return p[1] / (p[1] - 2.0);
    case Kind::Gamma: return p[0] * p[1];
    case Kind::Geometric: return (1.0 - p[0]) / p[0];
    case Kind::HyperExponential: {
      double m = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) m += d.weights()[i] * d.values()[i];
      return m;
    }
    case Kind::HyperGeometric: return p[2] * p[1] / p[0];
    case Kind::LogNormal: return std::exp(p[0] + 0.5 * p[1]);
    case Kind::NegativeBinomial: return p[0] * (1.0 - p[1]) / p[1];
    case Kind::Normal: return p[0];
    case Kind::Poisson: return p[0];
    case Kind::Randi: return 0.5 * (p[0] + p[1]);
    case Kind::Random: return 0.5;
    case Kind::StudentT:
      if (p[0] <= 1.0) throw UndefinedMomentError("studentt: mean requires nu > 1");
      return 0.0;
    case Kind::Triangular: return (p[0] + p[1] + p[2]) / 3.0;
    case Kind::TruncatedNormal: {
      const double sd = std::sqrt(p[1]);
      const auto t = trunc_moments(p[0], sd, p[2], p[3]);
      return p[0] + sd * (t.phi_a - t.phi_b) / t.mass;
    }
    case Kind::Uniform: return 0.5 * (p[0] + p[1]);
    case Kind::Weibull: return p[1] * gamma_fn(1.0 + 1.0 / p[0]);
  }
  throw ConstructionError("unknown distribution kind");
}

double theoretical_variance(const Distribution& d) {
  const auto& p = d.params();
  switch (d.kind()) {
    case Kind::Bernoulli: return p[0] * (1.0 - p[0]);
    case Kind::Beta: {
      const double s = p[0] + p[1];
      return p[0] * p[1] / (s * s * (s + 1.0));
    }
    case Kind::Binomial: return p[0] * p[1] * (1.0 - p[1]);
    case Kind::Cauchy: throw UndefinedMomentError("cauchy: variance is undefined");
    case Kind::ChiSquare: return 2.0 * p[0];
    case Kind::Deterministic: return 0.0;
    case Kind::Discrete: {
      const double m = theoretical_mean(d);
      double v = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) {
        const double dev = d.values()[i] - m;
        v += d.weights()[i] * dev * dev;
      }
      return v;
    }
    case Kind::Erlang: return p[0] / (p[1] * p[1]);
    case Kind::Exponential: return p[0] * p[0];
    case Kind::Fisher: {
      if (p[1] <= 4.0) throw UndefinedMomentError("fisher: variance requires d2 > 4");
      const double d1 = p[0];
      const double d2 = p[1];
      return 2.0 * d2 * d2 * (d1 + d2 - 2.0) / (d1 * (d2 - 2.0) * (d2 - 2.0) * (d2 - 4.0));
    }
    case Kind::Gamma: return p[0] * p[1] * p[1];
    case Kind::Geometric: return (1.0 - p[0]) / (p[0] * p[0]);
    case Kind::HyperExponential: {
      const double m = theoretical_mean(d);
      double second = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) {
        second += d.weights()[i] * 2.0 * d.values()[i] * d.values()[i];
      }
      return second - m * m;
    }
    case Kind::HyperGeometric: {
      const double n = p[0];
      const double k = p[1];
      const double draws = p[2];
      if (n <= 1.0) return 0.0;
      return draws * (k / n) * ((n - k) / n) * ((n - draws) / (n - 1.0));
    }
    case Kind::LogNormal: return std::expm1(p[1]) * std::exp(2.0 * p[0] + p[1]);
    case Kind::NegativeBinomial: return p[0] * (1.0 - p[1]) / (p[1] * p[1]);
    case Kind::Normal: return p[1];
    case Kind::Poisson: return p[0];
    case Kind::Randi: {
      const double w = p[1] - p[0] + 1.0;
      return (w * w - 1.0) / 12.0;
    }
    case Kind::Random: return 1.0 / 12.0;
    case Kind::StudentT:
      if (p[0] <= 2.0) throw UndefinedMomentError("studentt: variance requires nu > 2");
      return p[0] / (p[0] - 2.0);
    case Kind::Triangular: {
      const double a = p[0];
      const double b = p[1];
      const double c = p[2];
      return (a * a + b * b + c * c - a * b - a * c - b * c) / 18.0;
    }
    case Kind::TruncatedNormal: {
      const double sd = std::sqrt(p[1]);
      const auto t = trunc_moments(p[0], sd, p[2], p[3]);
      const double shift = (t.phi_a - t.phi_b) / t.mass;
      return p[1] * (1.0 + (t.alpha * t.phi_a - t.beta * t.phi_b) / t.mass - shift * shift);
    }
    case Kind::Uniform: return (p[1] - p[0]) * (p[1] - p[0]) / 12.0;
    case Kind::Weibull: {
      const double g1 = gamma_fn(1.0 + 1.0 / p[0]);
      const double g2 = gamma_fn(1.0 + 2.0 / p[0]);
      return p[1] * p[1] * (g2 - g1 * g1);
    }
  }
  throw ConstructionError("unknown distribution kind");
}

// ---- distribution functions --------------------------------------------------

double cdf(const Distribution& d, double x) {
  if (std::isnan(x)) throw DomainError("cdf: argument is NaN");
  const auto& p = d.params();
  switch (d.kind()) {
    case Kind::Bernoulli: return x < 0.0 ? 0.0 : (x < 1.0 ? 1.0 - p[0] : 1.0);
    case Kind::Beta:
      if (x <= 0.0) return 0.0;
      if (x >= 1.0) return 1.0;
      return special::incomplete_beta(p[0], p[1], x);
    case Kind::Binomial: {
      const double k = std::floor(x);
      if (k < 0.0) return 0.0;
      if (k >= p[0]) return 1.0;
      if (p[1] <= 0.0) return 1.0;
      if (p[1] >= 1.0) return 0.0;
      return special::incomplete_beta(p[0] - k, k + 1.0, 1.0 - p[1], p[1]);
    }
    case Kind::Cauchy: return 0.5 + std::atan((x - p[0]) / p[1]) / std::numbers::pi;
    case Kind::ChiSquare: return special::lower_gamma_p(0.5 * p[0], 0.5 * x);
    case Kind::Deterministic: return x < p[0] ? 0.0 : 1.0;
    case Kind::Discrete: {
      double total = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) {
        if (d.values()[i] <= x) total += d.weights()[i];
      }
      return std::min(1.0, total);
    }
    case Kind::Erlang: return special::lower_gamma_p(p[0], p[1] * x);
    case Kind::Exponential: return x <= 0.0 ? 0.0 : -std::expm1(-x / p[0]);
    case Kind::Fisher: {
      if (x <= 0.0) return 0.0;
      const double denom = p[0] * x + p[1];
      return special::incomplete_beta(0.5 * p[0], 0.5 * p[1], p[0] * x / denom, p[1] / denom);
    }
    case Kind::Gamma: return special::lower_gamma_p(p[0], x / p[1]);
    case Kind::Geometric: {
      const double k = std::floor(x);
      if (k < 0.0) return 0.0;
      return -std::expm1((k + 1.0) * std::log1p(-p[0]));
    }
    case Kind::HyperExponential: {
      if (x <= 0.0) return 0.0;
      double total = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) total += d.weights()[i] * -std::expm1(-x / d.values()[i]);
      return std::min(1.0, total);
    }
    case Kind::HyperGeometric: {
      const auto [lo, hi] = d.support();
      const double k = std::floor(x);
      if (k < lo) return 0.0;
      if (k >= hi) return 1.0;
      double total = 0.0;
      for (double j = lo; j <= k; j += 1.0) total += pdf(d, j);
      return std::min(1.0, total);
    }
    case Kind::LogNormal:
      if (x <= 0.0) return 0.0;
      return special::normal_cdf((std::log(x) - p[0]) / std::sqrt(p[1]));
    case Kind::NegativeBinomial: {
      const double k = std::floor(x);
      if (k < 0.0) return 0.0;
      if (p[1] >= 1.0) return 1.0;
      return special::incomplete_beta(p[0], k + 1.0, p[1], 1.0 - p[1]);
    }
    case Kind::Normal: return special::normal_cdf((x - p[0]) / std::sqrt(p[1]));
    case Kind::Poisson: {
      const double k = std::floor(x);
      if (k < 0.0) return 0.0;
      return special::upper_gamma_q(k + 1.0, p[0]);
    }
    case Kind::Randi: {
      const double k = std::floor(x);
      if (k < p[0]) return 0.0;
      if (k >= p[1]) return 1.0;
      return (k - p[0] + 1.0) / (p[1] - p[0] + 1.0);
    }
    case Kind::Random: return std::clamp(x, 0.0, 1.0);
    case Kind::StudentT: {
      const double nu = p[0];
      const double t2 = x * x;
      const double tail = 0.5 * special::incomplete_beta(0.5 * nu, 0.5, nu / (nu + t2), t2 / (nu + t2));
      return x > 0.0 ? 1.0 - tail : tail;
    }
    case Kind::Triangular: {
      const double a = p[0];
      const double b = p[1];
      const double c = p[2];
      if (x <= a) return 0.0;
      if (x >= b) return 1.0;
      if (x <= c) return (x - a) * (x - a) / ((b - a) * (c - a));
      return 1.0 - (b - x) * (b - x) / ((b - a) * (b - c));
    }
    case Kind::TruncatedNormal: {
      if (x <= p[2]) return 0.0;
      if (x >= p[3]) return 1.0;
      const double sd = std::sqrt(p[1]);
      const auto t = trunc_moments(p[0], sd, p[2], p[3]);
      return std::clamp((special::normal_cdf((x - p[0]) / sd) - special::normal_cdf(t.alpha)) / t.mass, 0.0, 1.0);
    }
    case Kind::Uniform: return std::clamp((x - p[0]) / (p[1] - p[0]), 0.0, 1.0);
    case Kind::Weibull: return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / p[1], p[0]));
  }
  throw ConstructionError("unknown distribution kind");
}

double pdf(const Distribution& d, double x) {
  const auto& p = d.params();
  const auto [lo, hi] = d.support();
  if (x < lo || x > hi) return 0.0;
  switch (d.kind()) {
    case Kind::Bernoulli: return x == 1.0 ? p[0] : (x == 0.0 ? 1.0 - p[0] : 0.0);
    case Kind::Beta:
      if (x <= 0.0 || x >= 1.0) return 0.0;
      return std::exp((p[0] - 1.0) * std::log(x) + (p[1] - 1.0) * std::log1p(-x) - log_beta(p[0], p[1]));
    case Kind::Binomial:
      if (!is_integer(x)) return 0.0;
      if (p[1] <= 0.0) return x == 0.0 ? 1.0 : 0.0;
      if (p[1] >= 1.0) return x == p[0] ? 1.0 : 0.0;
      return std::exp(log_choose(p[0], x) + x * std::log(p[1]) + (p[0] - x) * std::log1p(-p[1]));
    case Kind::Cauchy: {
      const double z = (x - p[0]) / p[1];
      return 1.0 / (std::numbers::pi * p[1] * (1.0 + z * z));
    }
    case Kind::ChiSquare:
      return pdf(Distribution::gamma(0.5 * p[0], 2.0), x);
    case Kind::Deterministic: return x == p[0] ? 1.0 : 0.0;
    case Kind::Discrete: {
      double total = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) {
        if (d.values()[i] == x) total += d.weights()[i];
      }
      return total;
    }
    case Kind::Erlang: return pdf(Distribution::gamma(p[0], 1.0 / p[1]), x);
    case Kind::Exponential: return std::exp(-x / p[0]) / p[0];
    case Kind::Fisher: {
      if (x <= 0.0) return (p[0] < 2.0) ? kInf : (p[0] == 2.0 ? 1.0 : 0.0);
      const double d1 = p[0];
      const double d2 = p[1];
      return std::exp(0.5 * (d1 * std::log(d1 * x) + d2 * std::log(d2) - (d1 + d2) * std::log(d1 * x + d2)) -
                      std::log(x) - log_beta(0.5 * d1, 0.5 * d2));
    }
    case Kind::Gamma:
      if (x <= 0.0) return p[0] < 1.0 ? kInf : (p[0] == 1.0 ? 1.0 / p[1] : 0.0);
      return std::exp((p[0] - 1.0) * std::log(x) - x / p[1] - log_gamma(p[0]) - p[0] * std::log(p[1]));
    case Kind::Geometric:
      if (!is_integer(x)) return 0.0;
      return p[0] * std::exp(x * std::log1p(-p[0]));
    case Kind::HyperExponential: {
      double total = 0.0;
      for (std::size_t i = 0; i < d.values().size(); ++i) {
        total += d.weights()[i] * std::exp(-x / d.values()[i]) / d.values()[i];
      }
      return total;
    }
    case Kind::HyperGeometric:
      if (!is_integer(x)) return 0.0;
      return std::exp(log_choose(p[1], x) + log_choose(p[0] - p[1], p[2] - x) - log_choose(p[0], p[2]));
    case Kind::LogNormal: {
      if (x <= 0.0) return 0.0;
      const double z = (std::log(x) - p[0]) / std::sqrt(p[1]);
      return std_normal_pdf(z) / (x * std::sqrt(p[1]));
    }
    case Kind::NegativeBinomial:
      if (!is_integer(x)) return 0.0;
      return std::exp(log_choose(x + p[0] - 1.0, x) + p[0] * std::log(p[1]) + x * std::log1p(-p[1]));
    case Kind::Normal: return std_normal_pdf((x - p[0]) / std::sqrt(p[1])) / std::sqrt(p[1]);
    case Kind::Poisson:
      if (!is_integer(x)) return 0.0;
      return std::exp(x * std::log(p[0]) - p[0] - log_gamma(x + 1.0));
    case Kind::Randi: return is_integer(x) ? 1.0 / (p[1] - p[0] + 1.0) : 0.0;
    case Kind::Random: return 1.0;
    case Kind::StudentT: {
      const double nu = p[0];
      return std::exp(log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu) - 0.5 * std::log(nu * std::numbers::pi) -
                      0.5 * (nu + 1.0) * std::log1p(x * x / nu));
    }
    case Kind::Triangular: {
      const double a = p[0];
      const double b = p[1];
      const double c = p[2];
      if (x < c) return 2.0 * (x - a) / ((b - a) * (c - a));
      if (x > c) return 2.0 * (b - x) / ((b - a) * (b - c));
      return 2.0 / (b - a);
    }
    case Kind::TruncatedNormal: {
      const double sd = std::sqrt(p[1]);
      const auto t = trunc_moments(p[0], sd, p[2], p[3]);
      return std_normal_pdf((x - p[0]) / sd) / (sd * t.mass);
    }
    case Kind::Uniform: return 1.0 / (p[1] - p[0]);
    case Kind::Weibull: {
      if (x <= 0.0) return p[0] < 1.0 ? kInf : (p[0] == 1.0 ? 1.0 / p[1] : 0.0);
      const double z = x / p[1];
      return p[0] / p[1] * std::pow(z, p[0] - 1.0) * std::exp(-std::pow(z, p[0]));
    }
  }
  throw ConstructionError("unknown distribution kind");
}

double inverse_cdf(const Distribution& d, double prob) {
  if (!(prob > 0.0 && prob < 1.0)) throw DomainError("inverseCdf: probability must lie in (0, 1)");
  if (d.is_discrete()) {
    throw DomainError("inverseCdf: not available for discrete kind " + std::string(kind_name(d.kind())));
  }
  auto [lo, hi] = d.support();

  // Bracket the root of cdf(x) - prob.
  if (!std::isfinite(lo)) {
    lo = std::isfinite(hi) ? hi - 1.0 : -1.0;
    while (cdf(d, lo) > prob) lo = 2.0 * lo - 1.0;
  }
  if (!std::isfinite(hi)) {
    hi = std::max(lo, 0.0) + 1.0;
    while (cdf(d, hi) < prob) hi = 2.0 * hi + 1.0;
  }

  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 500; ++iter) {
    const double fx = cdf(d, x) - prob;
    if (std::abs(fx) <= 1e-14) return x;
    if (fx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) break;
    const double density = pdf(d, x);
    double next = (density > 0.0 && std::isfinite(density)) ? x - fx / density : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

}  // namespace simstat
