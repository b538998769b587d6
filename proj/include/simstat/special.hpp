#pragma once

namespace simstat::special {

/// Regularized incomplete beta I_x(a, b), continued fraction (modified Lentz) to 1e-15.
/// `y` must equal 1 - x; passing it separately avoids cancellation near x = 1.
double incomplete_beta(double a, double b, double x, double y);
inline double incomplete_beta(double a, double b, double x) {
  return incomplete_beta(a, b, x, 1.0 - x);
}

/// Regularized lower incomplete gamma P(a, x).
double lower_gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double upper_gamma_q(double a, double x);

/// Standard normal CDF Φ(z).
double normal_cdf(double z);

}  // namespace simstat::special
