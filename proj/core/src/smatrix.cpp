#include "symscat/smatrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace symscat {
namespace {

constexpr cplx kI{0.0, 1.0};
constexpr double kSingularTol = 1e-12;
constexpr double kDegenerateTransfer = 1e-12;

SMatrix symmetrized(cplx s11, cplx s12, cplx s21, cplx s22, double k, double a) {
  SMatrix s;
  s.parity_residual = std::max(std::abs(s11 - s22), std::abs(s12 - s21));
  s.s11 = s.s22 = 0.5 * (s11 + s22);
  s.s12 = s.s21 = 0.5 * (s12 + s21);
  s.k = k;
  s.half_width = a;
  return s;
}

}  // namespace

double SMatrix::unitarity_residual() const {
  // (S^dagger S)_{ij} = sum_r conj(S_ri) S_rj
  const std::array<std::array<cplx, 2>, 2> m{{{s11, s12}, {s21, s22}}};
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      cplx acc = std::conj(m[0][i]) * m[0][j] + std::conj(m[1][i]) * m[1][j];
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

double SMatrix::max_entry_diff(const SMatrix& o) const {
  return std::max({std::abs(s11 - o.s11), std::abs(s12 - o.s12), std::abs(s21 - o.s21),
                   std::abs(s22 - o.s22)});
}

AmplitudeQuad amplitudes_from_boundary(const BoundaryData& bd, WaveNumber k, double a) {
  const double kv = k.value();
  const cplx ik = kI * kv;
  const cplx forward = std::exp(ik * a);  // e^{ika}
  const cplx backward = 1.0 / forward;
  AmplitudeQuad q;
  q.A = 0.5 * forward * (bd.psi_left + bd.dpsi_left / ik);
  q.B = 0.5 * backward * (bd.psi_left - bd.dpsi_left / ik);
  q.C = 0.5 * backward * (bd.psi_right + bd.dpsi_right / ik);
  q.D = 0.5 * forward * (bd.psi_right - bd.dpsi_right / ik);
  return q;
}

TransferMatrix transfer_matrix(const EvaluatedPotential& pot, Energy energy, int steps) {
  const auto k = wavenumber_from_energy(energy);
  const double a = pot.half_width();
  const auto [u1, u2] = fundamental_pair(pot, energy, steps);
  const auto b1 = u1.boundary();
  const auto b2 = u2.boundary();

  const cplx ik = kI * k.value();
  const cplx left = std::exp(-ik * a);  // e^{-ika}

  TransferMatrix t;
  t.k = k.value();
  t.half_width = a;
  // Column j: left data for (A, B) = e_j, propagated through the fundamental pair.
  for (int col = 0; col < 2; ++col) {
    const cplx psi = col == 0 ? left : 1.0 / left;
    const cplx dpsi = col == 0 ? ik * left : -ik / left;
    BoundaryData bd;
    bd.psi_left = psi;
    bd.dpsi_left = dpsi;
    bd.psi_right = psi * b1.psi_right + dpsi * b2.psi_right;
    bd.dpsi_right = psi * b1.dpsi_right + dpsi * b2.dpsi_right;
    const auto q = amplitudes_from_boundary(bd, k, a);
    (col == 0 ? t.t11 : t.t12) = q.C;
    (col == 0 ? t.t21 : t.t22) = q.D;
  }
  return t;
}

SMatrix smatrix_from_transfer(const TransferMatrix& t) {
  if (std::abs(t.t22) < kDegenerateTransfer) {
    throw Error(ErrorCode::kDegenerateTransfer, "|T22| below 1e-12");
  }
  // Left incidence (D = 0): B = -T21/T22 A, C = det T / T22 A.
  const cplx s11 = -t.t21 / t.t22;
  const cplx s21 = t.det() / t.t22;
  // Right incidence (A = 0): B = D / T22, C = T12 / T22 D.
  const cplx s12 = 1.0 / t.t22;
  const cplx s22 = t.t12 / t.t22;
  return symmetrized(s11, s12, s21, s22, t.k, t.half_width);
}

SMatrix smatrix_via_transfer(const EvaluatedPotential& pot, Energy energy, int steps) {
  return smatrix_from_transfer(transfer_matrix(pot, energy, steps));
}

SMatrix smatrix_via_eq11(const AmplitudeQuad& p, const AmplitudeQuad& q, WaveNumber k, double a) {
  // [B_p B_q; C_p C_q] = S [A_p A_q; D_p D_q]
  const cplx det = p.A * q.D - q.A * p.D;
  const double scale = std::sqrt(std::norm(p.A) + std::norm(p.D)) * std::sqrt(std::norm(q.A) + std::norm(q.D));
  if (!(std::abs(det) >= kSingularTol * scale)) {
    throw Error(ErrorCode::kSingularSystem, "incoming amplitudes of the two solutions are dependent");
  }
  // Inverse of the incoming block: (1/det) [D_q -A_q; -D_p A_p].
  const cplx s11 = (p.B * q.D - q.B * p.D) / det;
  const cplx s12 = (q.B * p.A - p.B * q.A) / det;
  const cplx s21 = (p.C * q.D - q.C * p.D) / det;
  const cplx s22 = (q.C * p.A - p.C * q.A) / det;
  return symmetrized(s11, s12, s21, s22, k.value(), a);
}

SMatrix smatrix_via_eq11(const AmplitudeQuad& q, WaveNumber k, double a) {
  const cplx denom = q.A * q.A - q.D * q.D;
  if (!(std::abs(denom) >= kSingularTol * (std::norm(q.A) + std::norm(q.D)))) {
    throw Error(ErrorCode::kSingularSystem, "A^2 - D^2 vanishes (standing-wave data)");
  }
  SMatrix s;
  s.s11 = s.s22 = (q.A * q.B - q.C * q.D) / denom;
  s.s12 = s.s21 = (q.A * q.C - q.B * q.D) / denom;
  s.k = k.value();
  s.half_width = a;
  return s;
}

SMatrix analytic_square_well(double v0, double a, Energy energy) {
  require(v0 >= 0.0 && std::isfinite(v0), ErrorCode::kPreconditionViolated, "v0 must be >= 0");
  require(a > 0.0 && std::isfinite(a), ErrorCode::kPreconditionViolated, "half-width must be positive");
  const double k = std::sqrt(energy.value());
  const double l = std::sqrt(energy.value() + v0);
  const double s = std::sin(2.0 * l * a);
  const double c = std::cos(2.0 * l * a);
  const cplx w = std::exp(cplx(0.0, -2.0 * k * a)) / cplx(c, -(k * k + l * l) / (2.0 * k * l) * s);
  const cplx reflect = cplx(0.0, (l * l - k * k) / (2.0 * k * l) * s);
  SMatrix out;
  out.s11 = out.s22 = w * reflect;
  out.s12 = out.s21 = w;
  out.k = k;
  out.half_width = a;
  return out;
}

SMatrix analytic_delta(double alpha, Energy energy) {
  require(alpha > 0.0 && std::isfinite(alpha), ErrorCode::kPreconditionViolated, "alpha must be positive");
  const double k = std::sqrt(energy.value());
  const double beta = alpha / (2.0 * k);
  const cplx w = 1.0 / cplx(1.0, -beta);
  SMatrix out;
  out.s11 = out.s22 = w * cplx(0.0, beta);
  out.s12 = out.s21 = w;
  out.k = k;
  out.half_width = 0.0;
  return out;
}

SMatrix delta_as_well_limit(double alpha, Energy energy, double eps, int steps) {
  require(eps > 0.0 && eps <= 0.1, ErrorCode::kPreconditionViolated, "eps must lie in (0, 0.1]");
  require(alpha > 0.0 && std::isfinite(alpha), ErrorCode::kPreconditionViolated, "alpha must be positive");
  const auto well = validate(SquareWell{alpha / (2.0 * eps), eps});
  return smatrix_via_transfer(well, energy, steps);
}

}  // namespace symscat
