#pragma once

#include <cstddef>
#include <vector>

#include "simstat/numvec.hpp"

namespace simstat {

/// Balanced one-way layout: m ≥ 2 treatments (rows), each with the same n ≥ 2 replicates.
class TreatmentMatrix {
 public:
  /// Throws ConstructionError if ragged or smaller than 2×2.
  explicit TreatmentMatrix(std::vector<NumVector> rows);

  [[nodiscard]] std::size_t treatments() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t replicates() const noexcept { return rows_.front().size(); }
  [[nodiscard]] const std::vector<NumVector>& rows() const noexcept { return rows_; }
  [[nodiscard]] const NumVector& row(std::size_t i) const { return rows_.at(i); }

 private:
  std::vector<NumVector> rows_;
};

struct AnovaTable {
  std::size_t m = 0;
  std::size_t n = 0;
  double grand_mean = 0.0;
  double sst = 0.0;
  double ssb = 0.0;
  double ssw = 0.0;
  std::size_t df_between = 0;  // m − 1
  std::size_t df_within = 0;   // m(n − 1)
  double ms_between = 0.0;
  double ms_within = 0.0;
  double f_statistic = 0.0;
  double p_value = 1.0;  // 1 − F_cdf(f; m − 1, m(n − 1))
};

/// Mean of the row means.
double grand_mean(const TreatmentMatrix& x);
/// ΣΣ x²ᵢⱼ − m·n·gμ²
double total_ss(const TreatmentMatrix& x);
/// Σᵢ (Σⱼ xᵢⱼ)²/n − m·n·gμ²
double between_ss(const TreatmentMatrix& x);
/// total − between
double within_ss(const TreatmentMatrix& x);
/// (ssb/(m − 1)) / (ssw/(m(n − 1))). DegenerateInputError when ssw = 0.
double f_statistic(const TreatmentMatrix& x);
AnovaTable anova(const TreatmentMatrix& x);

}  // namespace simstat
