#pragma once

#include <vector>

#include "symscat/core.hpp"

namespace symscat {

/// Upper sign of the +- convention: even functions, F+, W+, lambda_{2n}.
enum class Parity { kEven, kOdd };

inline constexpr double kMaxT = 6.0;
inline constexpr int kMinQuadOrder = 64;

/// Parity-reduced sine kernel on [0, pi t]:
///   K(x, y) = (sinc(x - y) +- sinc(x + y)) / pi.
struct KernelSpec {
  Parity parity = Parity::kEven;
  double t = 1.0;
  int quad_order = 200;
};

/// sin(u)/u, with the Taylor series for |u| < 1e-6.
double sinc(double u);

/// Eigenvalues of the symmetric Nystrom matrix sqrt(w_i) K(x_i, x_j) sqrt(w_j)
/// on Gauss-Legendre nodes, descending and clipped into [0, 1] after a 1e-10
/// range check. Throws TTooLarge for t > 6 and QuadOrderTooSmall below 64.
std::vector<double> sine_kernel_eigs(const KernelSpec& spec);

struct SineKernelSpectrum {
  double t = 0.0;
  std::vector<double> even;    // lambda_0, lambda_2, ...
  std::vector<double> odd;     // lambda_1, lambda_3, ...
  std::vector<double> merged;  // all of them, descending
};

SineKernelSpectrum sine_kernel_spectrum(double t, int quad_order);

/// log F+-(t) = sum log(1 - lambda_n) over the parity's eigenvalues.
/// Throws EigenvalueAtOne once some lambda >= 1 - 1e-13.
double fredholm_log_det(Parity parity, double t, int quad_order);

/// Large-t expansion
///   -(pi t)^2/4 -+ pi t/2 - log(pi t)/8 + (1/24 +- 1/4) log 2 + (3/2) zeta'(-1).
double asymptotic_log_det(Parity parity, double t);

struct GlPotentialSample {
  double t;
  double tau;
  double w;
};

/// W(tau) = -2 d^2/dtau^2 log F(t) - 1 (tau = pi t) by central differences of
/// the supplied log-determinant samples on a uniform t grid. Endpoints are
/// dropped, so the result has log_det.size() - 2 entries.
std::vector<GlPotentialSample> gl_potential(const std::vector<double>& t_grid, const std::vector<double>& log_det);

/// gl_potential applied to fredholm_log_det. The grid must be uniform with
/// spacing <= 0.05 and hold at least 5 points.
std::vector<GlPotentialSample> reconstruct_w(Parity parity, const std::vector<double>& t_grid, int quad_order);

/// log Delta+-(tau) obtained by rearranging the exact large-tau identity
///   log F = -tau^2/4 -+ tau/2 - log|tau +- 1/2|/8 +- log(2)/4 + alpha + log Delta.
/// Throws TauTooSmall for odd parity with tau <= 1/2.
double delta_identity_residual(Parity parity, double t, int quad_order);

/// The identity's t-independent part: alpha = log(2)/24 + (3/2) zeta'(-1).
double identity_constant();

struct PhaseShift {
  double k = 0.0;
  double eta_even = 0.0;  // -arctan(1/k)/2
  double eta_odd = 0.0;   // +arctan(1/k)/2
};

struct JostClosedForms {
  double k = 0.0;
  cplx a_odd;          // (k/(k+i))^{1/2}
  cplx exp_ieta_even;  // ((k-i)/(k+i))^{1/4}
};

PhaseShift phase_shift(double k);
JostClosedForms jost_forms(double k);

/// Everything the fredholm subcommand tabulates, aligned with t_grid. Entries
/// that are undefined at a grid point (W at the ends, odd Delta for
/// tau <= 1/2) hold NaN.
struct FredholmReport {
  std::vector<double> t_grid;
  std::vector<double> log_f_plus;
  std::vector<double> log_f_minus;
  std::vector<double> asym_residual_plus;
  std::vector<double> asym_residual_minus;
  std::vector<double> w_plus;
  std::vector<double> w_minus;
  std::vector<double> delta_identity_plus;
  std::vector<double> delta_identity_minus;
};

FredholmReport fredholm_report(const std::vector<double>& t_grid, int quad_order);

}  // namespace symscat
