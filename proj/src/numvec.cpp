#include "simstat/numvec.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simstat/errors.hpp"
#include "simstat/funcs.hpp"

namespace simstat {

namespace {

void require_finite(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ConstructionError("non-finite vector element at index " + std::to_string(i));
    }
  }
}

void require_same_length(const NumVector& a, const NumVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": length mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

template <class Op>
NumVector zip(const NumVector& a, const NumVector& b, const char* name, Op op) {
  require_same_length(a, b, name);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return NumVector(std::move(out));
}

template <class Op>
NumVector map(const NumVector& a, Op op) {
  std::vector<double> out(a.size());
  std::transform(a.begin(), a.end(), out.begin(), op);
  return NumVector(std::move(out));
}

}  // namespace

NumVector::NumVector(std::vector<double> values) : data_(std::move(values)) {
  require_finite(data_);
}

NumVector::NumVector(std::initializer_list<double> values) : data_(values) {
  require_finite(data_);
}

NumVector NumVector::make(std::span<const double> values) {
  return NumVector(std::vector<double>(values.begin(), values.end()));
}

double NumVector::at(std::size_t i) const {
  if (i >= data_.size()) {
    throw IndexError("index " + std::to_string(i) + " out of bounds for length " +
                     std::to_string(data_.size()));
  }
  return data_[i];
}

std::vector<std::int64_t> RangeSpec::indices() const {
  std::vector<std::int64_t> out;
  out.reserve(size());
  for (std::int64_t i = lo; i < stop(); ++i) out.push_back(i);
  return out;
}

NumVector RangeSpec::materialize() const {
  std::vector<double> out;
  out.reserve(size());
  for (std::int64_t i = lo; i < stop(); ++i) out.push_back(static_cast<double>(i));
  return NumVector(std::move(out));
}

double at(const NumVector& v, std::size_t i) { return v.at(i); }

NumVector slice(const NumVector& v, const RangeSpec& r) {
  if (r.empty()) return {};
  const auto n = static_cast<std::int64_t>(v.size());
  if (r.lo < 0 || r.stop() > n) {
    throw IndexError("slice [" + std::to_string(r.lo) + ", " + std::to_string(r.stop()) +
                     ") out of bounds for length " + std::to_string(v.size()));
  }
  return NumVector(std::vector<double>(v.begin() + r.lo, v.begin() + r.stop()));
}

double dot(const NumVector& a, const NumVector& b) {
  require_same_length(a, b, "dot");
  if (a.empty()) throw DimensionError("dot: empty operands");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

NumVector add(const NumVector& a, const NumVector& b) {
  return zip(a, b, "add", [](double x, double y) { return x + y; });
}

NumVector sub(const NumVector& a, const NumVector& b) {
  return zip(a, b, "sub", [](double x, double y) { return x - y; });
}

NumVector mul_elem(const NumVector& a, const NumVector& b) {
  return zip(a, b, "mulElem", [](double x, double y) { return x * y; });
}

NumVector scale(const NumVector& a, double c) {
  return map(a, [c](double x) { return x * c; });
}

NumVector pow_elem(const NumVector& a, double p) {
  return map(a, [p](double x) { return simstat::pow(x, p); });
}

NumVector root_elem(const NumVector& a, double n) {
  return map(a, [n](double x) { return simstat::root(x, n); });
}

NumVector concat(const NumVector& a, const NumVector& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return NumVector(std::move(out));
}

}  // namespace simstat
