#include "symscat/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "symscat/quadrature.hpp"

namespace symscat {
namespace {

constexpr double kClipTol = 1e-10;
constexpr double kTruncate = 1e-16;
constexpr double kAtOne = 1e-13;
constexpr double kMaxGridSpacing = 0.05;

double sign_of(Parity p) { return p == Parity::kEven ? 1.0 : -1.0; }

void check_kernel_args(double t, int quad_order) {
  require(t > 0.0 && std::isfinite(t), ErrorCode::kPreconditionViolated, "t must be positive");
  require(t <= kMaxT, ErrorCode::kTTooLarge,
          "t = " + std::to_string(t) + " exceeds the double-precision ceiling t <= 6");
  require(quad_order >= kMinQuadOrder, ErrorCode::kQuadOrderTooSmall, "quad_order must be >= 64");
}

bool uniform_spacing(const std::vector<double>& grid, double& spacing) {
  if (grid.size() < 2) return false;
  spacing = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  if (!(spacing > 0.0)) return false;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid[i] - grid[i - 1] - spacing) > 1e-9 * spacing) return false;
  }
  return true;
}

double delta_identity_from_log_det(Parity parity, double t, double log_f) {
  const double tau = constants::pi * t;
  const double s = sign_of(parity);
  return log_f + 0.25 * tau * tau + s * 0.5 * tau + std::log(std::abs(tau + 0.5 * s)) / 8.0 -
         s * 0.25 * std::log(2.0) - identity_constant();
}

}  // namespace

double sinc(double u) {
  if (std::abs(u) < 1e-6) {
    const double u2 = u * u;
    return 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0 * (1.0 - u2 / 72.0)));
  }
  return std::sin(u) / u;
}

std::vector<double> sine_kernel_eigs(const KernelSpec& spec) {
  check_kernel_args(spec.t, spec.quad_order);
  const auto rule = gauss_legendre(spec.quad_order, 0.0, constants::pi * spec.t);
  const auto n = static_cast<Eigen::Index>(spec.quad_order);
  const double sign = sign_of(spec.parity);

  Eigen::VectorXd sw(n);
  for (Eigen::Index i = 0; i < n; ++i) sw(i) = std::sqrt(rule.weights[static_cast<std::size_t>(i)]);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double y = rule.nodes[static_cast<std::size_t>(j)];
    for (Eigen::Index i = j; i < n; ++i) {
      const double x = rule.nodes[static_cast<std::size_t>(i)];
      const double k = (sinc(x - y) + sign * sinc(x + y)) / constants::pi;
      m(i, j) = m(j, i) = sw(i) * k * sw(j);
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorCode::kSpectrumOutOfRange, "eigensolver did not converge");
  std::vector<double> eigs(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (double& e : eigs) {
    require(e >= -kClipTol && e <= 1.0 + kClipTol, ErrorCode::kSpectrumOutOfRange,
            "eigenvalue " + std::to_string(e) + " outside [0, 1]");
    e = std::clamp(e, 0.0, 1.0);
  }
  std::sort(eigs.begin(), eigs.end(), std::greater<>());
  return eigs;
}

SineKernelSpectrum sine_kernel_spectrum(double t, int quad_order) {
  SineKernelSpectrum s;
  s.t = t;
  s.even = sine_kernel_eigs({Parity::kEven, t, quad_order});
  s.odd = sine_kernel_eigs({Parity::kOdd, t, quad_order});
  s.merged = s.even;
  s.merged.insert(s.merged.end(), s.odd.begin(), s.odd.end());
  std::sort(s.merged.begin(), s.merged.end(), std::greater<>());
  return s;
}

double fredholm_log_det(Parity parity, double t, int quad_order) {
  const auto eigs = sine_kernel_eigs({parity, t, quad_order});
  double acc = 0.0;
  for (double e : eigs) {
    if (e < kTruncate) break;
    require(e < 1.0 - kAtOne, ErrorCode::kEigenvalueAtOne,
            "an eigenvalue is within 1e-13 of 1 at t = " + std::to_string(t));
    acc += std::log1p(-e);
  }
  return acc;
}

double identity_constant() { return std::log(2.0) / 24.0 + 1.5 * constants::zeta_prime_minus1; }

double asymptotic_log_det(Parity parity, double t) {
  require(t > 0.0, ErrorCode::kPreconditionViolated, "t must be positive");
  const double s = sign_of(parity);
  const double tau = constants::pi * t;
  return -0.25 * tau * tau - s * 0.5 * tau - std::log(tau) / 8.0 + (1.0 / 24.0 + s / 4.0) * std::log(2.0) +
         1.5 * constants::zeta_prime_minus1;
}

std::vector<GlPotentialSample> gl_potential(const std::vector<double>& t_grid, const std::vector<double>& log_det) {
  require(t_grid.size() == log_det.size() && t_grid.size() >= 3, ErrorCode::kPreconditionViolated,
          "need matching t and log F samples (at least 3)");
  double h = 0.0;
  require(uniform_spacing(t_grid, h), ErrorCode::kPreconditionViolated, "t grid must be uniform");
  const double dtau = constants::pi * h;
  std::vector<GlPotentialSample> out;
  out.reserve(t_grid.size() - 2);
  for (std::size_t i = 1; i + 1 < t_grid.size(); ++i) {
    const double second = (log_det[i + 1] - 2.0 * log_det[i] + log_det[i - 1]) / (dtau * dtau);
    out.push_back({t_grid[i], constants::pi * t_grid[i], -2.0 * second - 1.0});
  }
  return out;
}

std::vector<GlPotentialSample> reconstruct_w(Parity parity, const std::vector<double>& t_grid, int quad_order) {
  double h = 0.0;
  require(t_grid.size() >= 5, ErrorCode::kPreconditionViolated, "need at least 5 grid points");
  require(uniform_spacing(t_grid, h), ErrorCode::kPreconditionViolated, "t grid must be uniform");
  require(h <= kMaxGridSpacing * (1.0 + 1e-9), ErrorCode::kPreconditionViolated, "t spacing must be <= 0.05");
  std::vector<double> log_det(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) log_det[i] = fredholm_log_det(parity, t_grid[i], quad_order);
  return gl_potential(t_grid, log_det);
}

double delta_identity_residual(Parity parity, double t, int quad_order) {
  const double tau = constants::pi * t;
  require(parity == Parity::kEven || tau > 0.5, ErrorCode::kTauTooSmall,
          "odd-parity identity is valid only for tau > 1/2");
  return delta_identity_from_log_det(parity, t, fredholm_log_det(parity, t, quad_order));
}

PhaseShift phase_shift(double k) {
  require(k > 0.0 && std::isfinite(k), ErrorCode::kNonPositiveK, "k must be positive");
  const double half = 0.5 * std::atan(1.0 / k);
  return {k, -half, half};
}

JostClosedForms jost_forms(double k) {
  require(k > 0.0 && std::isfinite(k), ErrorCode::kNonPositiveK, "k must be positive");
  const cplx i{0.0, 1.0};
  JostClosedForms j;
  j.k = k;
  j.a_odd = std::sqrt(k / (k + i));
  j.exp_ieta_even = std::sqrt(std::sqrt((k - i) / (k + i)));
  return j;
}

FredholmReport fredholm_report(const std::vector<double>& t_grid, int quad_order) {
  require(!t_grid.empty(), ErrorCode::kPreconditionViolated, "empty t grid");
  for (double t : t_grid) check_kernel_args(t, quad_order);

  const auto n = t_grid.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  FredholmReport r;
  r.t_grid = t_grid;
  r.log_f_plus.resize(n);
  r.log_f_minus.resize(n);
  r.asym_residual_plus.resize(n);
  r.asym_residual_minus.resize(n);
  r.w_plus.assign(n, nan);
  r.w_minus.assign(n, nan);
  r.delta_identity_plus.resize(n);
  r.delta_identity_minus.assign(n, nan);

  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_grid[i];
    const double tau = constants::pi * t;
    r.log_f_plus[i] = fredholm_log_det(Parity::kEven, t, quad_order);
    r.log_f_minus[i] = fredholm_log_det(Parity::kOdd, t, quad_order);
    r.asym_residual_plus[i] = r.log_f_plus[i] - asymptotic_log_det(Parity::kEven, t);
    r.asym_residual_minus[i] = r.log_f_minus[i] - asymptotic_log_det(Parity::kOdd, t);
    r.delta_identity_plus[i] = delta_identity_from_log_det(Parity::kEven, t, r.log_f_plus[i]);
    if (tau > 0.5) r.delta_identity_minus[i] = delta_identity_from_log_det(Parity::kOdd, t, r.log_f_minus[i]);
  }

  double h = 0.0;
  if (n >= 5 && uniform_spacing(t_grid, h) && h <= kMaxGridSpacing * (1.0 + 1e-9)) {
    const auto wp = gl_potential(t_grid, r.log_f_plus);
    const auto wm = gl_potential(t_grid, r.log_f_minus);
    for (std::size_t i = 0; i < wp.size(); ++i) {
      r.w_plus[i + 1] = wp[i].w;
      r.w_minus[i + 1] = wm[i].w;
    }
  }
  return r;
}

}  // namespace symscat
