#pragma once

#include "symscat/core.hpp"

namespace symscat {

/// f(theta) = 1 on [alpha, 2 pi - alpha], 0 elsewhere.
struct ArcSymbol {
  double alpha = 0.0;

  /// c_0 = 1 - alpha/pi, c_m = -sin(m alpha)/(pi m).
  double coefficient(int m) const;
};

struct ToeplitzResult {
  int n = 0;
  double alpha = 0.0;
  double log_det = 0.0;
  /// n^2 log cos(alpha/2) - log(n sin(alpha/2))/4 + log(2)/12 + 3 zeta'(-1)
  double asymptotic = 0.0;
  double residual = 0.0;
  /// Decimal digits of the arithmetic that produced log_det (16 = double).
  int digits = 0;
};

double toeplitz_asymptotic(double alpha, int n);

/// log det of the n x n Toeplitz section [c_{j-k}] by Cholesky, accumulated
/// in the log domain. The section of a projection is close to singular for
/// large n alpha, so the factorization escalates from double to 50, 100, 200
/// and 400 digit arithmetic until two consecutive levels agree to 1e-10.
/// Throws NotPositiveDefinite when even the widest level breaks down.
ToeplitzResult toeplitz_log_det(const ArcSymbol& symbol, int n);

struct SzegoLimitReport {
  double alpha = 0.0;
  int n = 0;
  double t = 0.0;
  double toeplitz_log_det = 0.0;
  /// log F+(t) + log F-(t) from the Nystrom route.
  double fredholm_log_det = 0.0;
  /// -(pi t)^2/2 - log(pi t)/4 + log(2)/12 + 3 zeta'(-1)
  double continuum_asymptotic = 0.0;
  double gap_to_fredholm = 0.0;
  double gap_to_asymptotic = 0.0;
};

/// Toeplitz route against the Fredholm route at alpha n = 2 pi t.
SzegoLimitReport szego_limit_check(double alpha, int n, double t, int quad_order = 300);

double continuum_asymptotic_log_det(double t);

}  // namespace symscat
