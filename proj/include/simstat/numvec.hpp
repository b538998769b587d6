#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace simstat {

/// Immutable dense vector of finite reals. Every operation returns a new value.
class NumVector {
 public:
  NumVector() = default;
  /// Throws ConstructionError if any element is NaN or infinite.
  explicit NumVector(std::vector<double> values);
  NumVector(std::initializer_list<double> values);

  static NumVector make(std::span<const double> values);

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }
  [[nodiscard]] std::span<const double> values() const noexcept { return data_; }
  [[nodiscard]] const std::vector<double>& data() const noexcept { return data_; }

  [[nodiscard]] auto begin() const noexcept { return data_.cbegin(); }
  [[nodiscard]] auto end() const noexcept { return data_.cend(); }

  /// Bounds-checked element access (0-based); throws IndexError.
  [[nodiscard]] double at(std::size_t i) const;
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return data_[i]; }

  friend bool operator==(const NumVector&, const NumVector&) = default;

 private:
  std::vector<double> data_;
};

/// Integer range `lo to hi` (inclusive) or `lo until hi` (exclusive).
struct RangeSpec {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool inclusive = true;

  static constexpr RangeSpec to(std::int64_t lo, std::int64_t hi) { return {lo, hi, true}; }
  static constexpr RangeSpec until(std::int64_t lo, std::int64_t hi) { return {lo, hi, false}; }

  /// One past the last produced value.
  [[nodiscard]] constexpr std::int64_t stop() const noexcept { return inclusive ? hi + 1 : hi; }
  [[nodiscard]] constexpr bool empty() const noexcept { return stop() <= lo; }
  [[nodiscard]] constexpr std::size_t size() const noexcept {
    return empty() ? 0 : static_cast<std::size_t>(stop() - lo);
  }
  [[nodiscard]] std::vector<std::int64_t> indices() const;
  /// The range values as reals, in order.
  [[nodiscard]] NumVector materialize() const;

  friend bool operator==(const RangeSpec&, const RangeSpec&) = default;
};

[[nodiscard]] double at(const NumVector& v, std::size_t i);
/// Elements at the indices of `r`; throws IndexError if any index is out of bounds.
[[nodiscard]] NumVector slice(const NumVector& v, const RangeSpec& r);
/// Σ aᵢbᵢ; throws DimensionError on mismatched or empty operands.
[[nodiscard]] double dot(const NumVector& a, const NumVector& b);

[[nodiscard]] NumVector add(const NumVector& a, const NumVector& b);
[[nodiscard]] NumVector sub(const NumVector& a, const NumVector& b);
[[nodiscard]] NumVector mul_elem(const NumVector& a, const NumVector& b);
[[nodiscard]] NumVector scale(const NumVector& a, double c);
/// Elementwise exponentiation with the same domain rules as `simstat::pow`.
[[nodiscard]] NumVector pow_elem(const NumVector& a, double p);
/// Elementwise n-th root with the same domain rules as `simstat::root`.
[[nodiscard]] NumVector root_elem(const NumVector& a, double n);
[[nodiscard]] NumVector concat(const NumVector& a, const NumVector& b);

}  // namespace simstat
