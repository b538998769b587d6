#include "simstat/anova.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simstat/errors.hpp"
#include "simstat/stats.hpp"
#include "simstat/variate.hpp"

namespace simstat {

namespace {

using Wide = long double;

// Sums of squares shrink to roundoff when there is no variation; clamp those to zero.
double clamp_ss(Wide value, Wide scale, const char* what) {
  if (value >= 0) return static_cast<double>(value);
  if (value >= -1e-9L * std::max<Wide>(1, scale)) return 0.0;
  throw NumericError(std::string(what) + ": negative sum of squares");
}

struct Sums {
  Wide sum_sq = 0;        // ΣΣ x²
  Wide row_sum_sq = 0;    // Σᵢ (Σⱼ x)²/n
  Wide correction = 0;    // m·n·gμ²
};

Sums sums(const TreatmentMatrix& x) {
  const Wide m = static_cast<Wide>(x.treatments());
  const Wide n = static_cast<Wide>(x.replicates());
  const Wide gm = grand_mean(x);
  Sums s;
  for (const auto& row : x.rows()) {
    Wide row_sum = 0;
    for (double v : row) {
      row_sum += v;
      s.sum_sq += static_cast<Wide>(v) * v;
    }
    s.row_sum_sq += row_sum * row_sum / n;
  }
  s.correction = m * n * gm * gm;
  return s;
}

}  // namespace

TreatmentMatrix::TreatmentMatrix(std::vector<NumVector> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) throw ConstructionError("treatment matrix: at least 2 treatments (rows) are required");
  const std::size_t n = rows_.front().size();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != n) {
      throw ConstructionError("treatment matrix: row " + std::to_string(i + 1) + " has " +
                              std::to_string(rows_[i].size()) + " values, expected " + std::to_string(n));
    }
  }
  if (n < 2) throw ConstructionError("treatment matrix: at least 2 replicates per treatment are required");
}

double grand_mean(const TreatmentMatrix& x) {
  Wide total = 0;
  for (const auto& row : x.rows()) total += mean(row);
  return static_cast<double>(total / static_cast<Wide>(x.treatments()));
}

double total_ss(const TreatmentMatrix& x) {
  const auto s = sums(x);
  return clamp_ss(s.sum_sq - s.correction, s.sum_sq, "sst");
}

double between_ss(const TreatmentMatrix& x) {
  const auto s = sums(x);
  return clamp_ss(s.row_sum_sq - s.correction, s.sum_sq, "ssb");
}

double within_ss(const TreatmentMatrix& x) {
  const auto s = sums(x);
  const Wide sst = s.sum_sq - s.correction;
  const Wide ssb = s.row_sum_sq - s.correction;
  return clamp_ss(sst - ssb, s.sum_sq, "ssw");
}

double f_statistic(const TreatmentMatrix& x) {
  const double m = static_cast<double>(x.treatments());
  const double n = static_cast<double>(x.replicates());
  const double ssw = within_ss(x);
  if (ssw <= 0.0) throw DegenerateInputError("F statistic undefined: no within-group variation");
  return (between_ss(x) / (m - 1.0)) / (ssw / (m * (n - 1.0)));
}

AnovaTable anova(const TreatmentMatrix& x) {
  AnovaTable t;
  t.m = x.treatments();
  t.n = x.replicates();
  t.grand_mean = grand_mean(x);
  t.sst = total_ss(x);
  t.ssb = between_ss(x);
  t.ssw = within_ss(x);
  t.df_between = t.m - 1;
  t.df_within = t.m * (t.n - 1);
  t.ms_between = t.ssb / static_cast<double>(t.df_between);
  t.ms_within = t.ssw / static_cast<double>(t.df_within);
  t.f_statistic = f_statistic(x);
  const auto fisher = Distribution::fisher(static_cast<double>(t.df_between), static_cast<double>(t.df_within));
  t.p_value = std::clamp(1.0 - cdf(fisher, t.f_statistic), 0.0, 1.0);
  return t;
}

}  // namespace simstat
