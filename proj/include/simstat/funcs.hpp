#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "simstat/numvec.hpp"

namespace simstat {

/// i ↦ f(i) over the integers of a range.
using IndexFunction = std::function<double(std::int64_t)>;
/// x ↦ f(x), an integrand.
using RealFunction = std::function<double(double)>;
using Predicate = std::function<bool(double)>;

/// Finite set of reals kept sorted ascending without duplicates.
class RealSet {
 public:
  RealSet() = default;
  explicit RealSet(std::vector<double> values);
  RealSet(std::initializer_list<double> values);

  [[nodiscard]] std::size_t size() const noexcept { return elems_.size(); }
  [[nodiscard]] bool empty() const noexcept { return elems_.empty(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return elems_; }
  [[nodiscard]] auto begin() const noexcept { return elems_.cbegin(); }
  [[nodiscard]] auto end() const noexcept { return elems_.cend(); }
  [[nodiscard]] bool contains(double x) const noexcept;

  [[nodiscard]] RealSet unite(const RealSet& other) const;
  [[nodiscard]] RealSet intersect(const RealSet& other) const;
  [[nodiscard]] bool subset_of(const RealSet& other) const;

  friend bool operator==(const RealSet&, const RealSet&) = default;

 private:
  std::vector<double> elems_;
};

/// x↑y. Chains are evaluated left to right: 2↑2↑2 == pow(pow(2,2),2).
/// Throws DomainError for a negative base with fractional exponent, or 0 to a negative power.
[[nodiscard]] double pow(double x, double y);
/// x↓n = x^(1/n). Requires x ≥ 0 and n ≠ 0.
[[nodiscard]] double root(double x, double n);

/// ln Γ(x) for x > 0 (Lanczos, g = 7, nine coefficients).
[[nodiscard]] double log_gamma(double x);
/// Γ(x) for x > 0; exact for small positive integers.
[[nodiscard]] double gamma_fn(double x);
/// x!: exact product for non-negative integers, Γ(x + 1) otherwise. Requires x > -1.
[[nodiscard]] double factorial(double x);
/// x(x+1)…(x+n-1)
[[nodiscard]] double rising_factorial(double x, std::int64_t n);
/// x(x-1)…(x-n+1)
[[nodiscard]] double falling_factorial(double x, std::int64_t n);

[[nodiscard]] double sum_series(const RangeSpec& r);
[[nodiscard]] double sum_series(const RangeSpec& r, const IndexFunction& f);
[[nodiscard]] double sum_series(std::span<const double> values);
[[nodiscard]] double sum_series(const NumVector& v);
[[nodiscard]] double sum_series(const RealSet& s);

[[nodiscard]] double prod_series(const RangeSpec& r);
[[nodiscard]] double prod_series(const RangeSpec& r, const IndexFunction& f);
[[nodiscard]] double prod_series(std::span<const double> values);
[[nodiscard]] double prod_series(const NumVector& v);
[[nodiscard]] double prod_series(const RealSet& s);

/// ∫ₐᵇ f(x) dx by adaptive Simpson; absolute error target max(1e-8, 1e-10·|I|).
/// Requires a ≤ b. Throws NumericError if f is non-finite anywhere it is sampled.
[[nodiscard]] double integrate(double a, double b, const RealFunction& f);

[[nodiscard]] bool member_of(double x, const RealSet& s);
[[nodiscard]] bool member_of(double x, std::span<const double> values);
[[nodiscard]] bool for_all(std::span<const double> values, const Predicate& p);
[[nodiscard]] bool for_all(const RealSet& s, const Predicate& p);
[[nodiscard]] bool exists(std::span<const double> values, const Predicate& p);
[[nodiscard]] bool exists(const RealSet& s, const Predicate& p);
[[nodiscard]] constexpr bool negate(bool b) noexcept { return !b; }

}  // namespace simstat
