#include "simstat/funcs.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "simstat/errors.hpp"

namespace simstat {

namespace {

bool is_integer(double x) { return std::isfinite(x) && std::floor(x) == x; }

double checked(double value, const char* what) {
  if (!std::isfinite(value)) throw NumericError(std::string(what) + ": non-finite result");
  return value;
}

// Neumaier-compensated running sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct SimpsonPanel {
  double a, fa, m, fm, b, fb, whole;
};

double eval(const RealFunction& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw NumericError("integrand is non-finite at x = " + std::to_string(x));
  }
  return y;
}

SimpsonPanel make_panel(const RealFunction& f, double a, double fa, double b, double fb) {
  const double m = 0.5 * (a + b);
  const double fm = eval(f, m);
  return {a, fa, m, fm, b, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb)};
}

constexpr int kMaxDepth = 50;
constexpr int kMinDepth = 4;

double adaptive_simpson(const RealFunction& f, const SimpsonPanel& p, double eps, int depth) {
  const SimpsonPanel left = make_panel(f, p.a, p.fa, p.m, p.fm);
  const SimpsonPanel right = make_panel(f, p.m, p.fm, p.b, p.fb);
  const double refined = left.whole + right.whole;
  const double delta = refined - p.whole;
  const bool converged = std::abs(delta) <= 15.0 * eps ||
                         std::abs(delta) <= 64.0 * DBL_EPSILON * (std::abs(left.whole) + std::abs(right.whole));
  if ((converged && depth >= kMinDepth) || depth >= kMaxDepth) {
    return refined + delta / 15.0;
  }
  return adaptive_simpson(f, left, 0.5 * eps, depth + 1) +
         adaptive_simpson(f, right, 0.5 * eps, depth + 1);
}

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

RealSet::RealSet(std::vector<double> values) : elems_(std::move(values)) {
  for (double v : elems_) {
    if (!std::isfinite(v)) throw ConstructionError("non-finite set element");
  }
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

RealSet::RealSet(std::initializer_list<double> values) : RealSet(std::vector<double>(values)) {}

bool RealSet::contains(double x) const noexcept {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

RealSet RealSet::unite(const RealSet& other) const {
  std::vector<double> out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return RealSet(std::move(out));
}

RealSet RealSet::intersect(const RealSet& other) const {
  std::vector<double> out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
  return RealSet(std::move(out));
}

bool RealSet::subset_of(const RealSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

double pow(double x, double y) {
  if (x < 0.0 && !is_integer(y)) {
    throw DomainError("pow: negative base with non-integer exponent");
  }
  if (x == 0.0 && y < 0.0) throw DomainError("pow: zero raised to a negative power");
  return checked(std::pow(x, y), "pow");
}

double root(double x, double n) {
  if (x < 0.0) throw DomainError("root: negative radicand");
  if (n == 0.0) throw DomainError("root: zeroth root");
  if (x == 0.0 && n < 0.0) throw DomainError("root: zero radicand with negative index");
  return checked(std::pow(x, 1.0 / n), "root");
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("logGamma: argument must be positive");
  if (x < 0.5) return lanczos_log_gamma(x + 1.0) - std::log(x);
  return lanczos_log_gamma(x);
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive");
  if (is_integer(x) && x <= 23.0) {
    double product = 1.0;
    for (double k = 2.0; k < x; k += 1.0) product *= k;
    return product;
  }
  return checked(std::exp(log_gamma(x)), "gamma");
}

double factorial(double x) {
  if (!(x > -1.0)) throw DomainError("factorial: argument must exceed -1");
  if (is_integer(x)) {
    double product = 1.0;
    for (double k = 2.0; k <= x; k += 1.0) product *= k;
    return checked(product, "factorial");
  }
  return gamma_fn(x + 1.0);
}

double rising_factorial(double x, std::int64_t n) {
  if (n < 0) throw DomainError("risingFactorial: negative count");
  double product = 1.0;
  for (std::int64_t k = 0; k < n; ++k) product *= x + static_cast<double>(k);
  return checked(product, "risingFactorial");
}

double falling_factorial(double x, std::int64_t n) {
  if (n < 0) throw DomainError("fallingFactorial: negative count");
  double product = 1.0;
  for (std::int64_t k = 0; k < n; ++k) product *= x - static_cast<double>(k);
  return checked(product, "fallingFactorial");
}

double sum_series(const RangeSpec& r) {
  return sum_series(r, [](std::int64_t i) { return static_cast<double>(i); });
}

double sum_series(const RangeSpec& r, const IndexFunction& f) {
  Accumulator acc;
  for (std::int64_t i = r.lo; i < r.stop(); ++i) {
    const double y = f(i);
    if (!std::isfinite(y)) throw NumericError("Σ: term " + std::to_string(i) + " is non-finite");
    acc.add(y);
  }
  return checked(acc.value(), "Σ");
}

double sum_series(std::span<const double> values) {
  Accumulator acc;
  for (double v : values) acc.add(v);
  return checked(acc.value(), "Σ");
}

double sum_series(const NumVector& v) { return sum_series(v.values()); }
double sum_series(const RealSet& s) { return sum_series(s.values()); }

double prod_series(const RangeSpec& r) {
  return prod_series(r, [](std::int64_t i) { return static_cast<double>(i); });
}

double prod_series(const RangeSpec& r, const IndexFunction& f) {
  double product = 1.0;
  for (std::int64_t i = r.lo; i < r.stop(); ++i) {
    const double y = f(i);
    if (!std::isfinite(y)) throw NumericError("∏: term " + std::to_string(i) + " is non-finite");
    product *= y;
  }
  return checked(product, "∏");
}

double prod_series(std::span<const double> values) {
  double product = 1.0;
  for (double v : values) product *= v;
  return checked(product, "∏");
}

double prod_series(const NumVector& v) { return prod_series(v.values()); }
double prod_series(const RealSet& s) { return prod_series(s.values()); }

double integrate(double a, double b, const RealFunction& f) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: bounds must be finite");
  if (a > b) throw DomainError("integrate: lower bound exceeds upper bound");
  if (a == b) return 0.0;
  const SimpsonPanel whole = make_panel(f, a, eval(f, a), b, eval(f, b));
  const double eps = std::max(1e-10, 1e-12 * std::abs(whole.whole));
  return checked(adaptive_simpson(f, whole, eps, 0), "integrate");
}

bool member_of(double x, const RealSet& s) { return s.contains(x); }

bool member_of(double x, std::span<const double> values) {
  return std::find(values.begin(), values.end(), x) != values.end();
}

bool for_all(std::span<const double> values, const Predicate& p) {
  return std::all_of(values.begin(), values.end(), p);
}

bool for_all(const RealSet& s, const Predicate& p) { return for_all(s.values(), p); }

bool exists(std::span<const double> values, const Predicate& p) {
  return std::any_of(values.begin(), values.end(), p);
}

bool exists(const RealSet& s, const Predicate& p) { return exists(s.values(), p); }

}  // namespace simstat
