#pragma once

#include "symscat/core.hpp"
#include "symscat/potential.hpp"
#include "symscat/propagate.hpp"

namespace symscat {

/// Plane-wave amplitudes around the scatterer:
///   x < -a:  A e^{ikx} + B e^{-ikx}
///   x >  a:  C e^{ikx} + D e^{-ikx}
/// A and D are incoming, B and C outgoing.
struct AmplitudeQuad {
  cplx A;
  cplx B;
  cplx C;
  cplx D;
};

/// Outgoing = S * incoming, i.e. (B, C)^T = S (A, D)^T.
struct SMatrix {
  cplx s11;
  cplx s12;
  cplx s21;
  cplx s22;
  double k = 0.0;
  double half_width = 0.0;
  /// max(|s11 - s22|, |s12 - s21|) before symmetrization; zero for the
  /// closed forms, which are symmetric by construction.
  double parity_residual = 0.0;

  /// max-norm of S^dagger S - I.
  double unitarity_residual() const;
  /// Largest entrywise modulus of the difference.
  double max_entry_diff(const SMatrix& other) const;
};

/// Maps left amplitudes (A, B) to right amplitudes (C, D).
struct TransferMatrix {
  cplx t11;
  cplx t12;
  cplx t21;
  cplx t22;
  double k = 0.0;
  double half_width = 0.0;

  cplx det() const { return t11 * t22 - t12 * t21; }
};

/// Matching of the exterior plane waves to interior boundary data.
AmplitudeQuad amplitudes_from_boundary(const BoundaryData& bd, WaveNumber k, double half_width);

TransferMatrix transfer_matrix(const EvaluatedPotential& pot, Energy energy, int steps = kDefaultSteps);

/// Left- and right-incident columns are computed independently from T; the
/// raw asymmetry is recorded and the stored matrix is the symmetrized average.
SMatrix smatrix_from_transfer(const TransferMatrix& t);
SMatrix smatrix_via_transfer(const EvaluatedPotential& pot, Energy energy, int steps = kDefaultSteps);

/// Exact 2x2 solve (B C; ...) = S (A D; ...) from two linearly independent
/// solutions. Throws SingularSystem when the incoming amplitudes are
/// (numerically) dependent.
SMatrix smatrix_via_eq11(const AmplitudeQuad& first, const AmplitudeQuad& second, WaveNumber k,
                         double half_width);

/// Single-solution form with parity imposed:
///   S11 = (AB - CD)/(A^2 - D^2),  S12 = (AC - BD)/(A^2 - D^2).
/// Throws SingularSystem when |A^2 - D^2| < 1e-12 (|A|^2 + |D|^2), which
/// includes every parity-definite (standing-wave) solution.
SMatrix smatrix_via_eq11(const AmplitudeQuad& quad, WaveNumber k, double half_width);

/// Closed form for the well V = -v0 on (-a, a); l = sqrt(E + v0).
SMatrix analytic_square_well(double v0, double half_width, Energy energy);

/// Closed form for V = -alpha delta(x); beta = alpha / (2k).
SMatrix analytic_delta(double alpha, Energy energy);

/// Transfer-route S-matrix of the well with depth alpha/(2 eps) and half-width
/// eps, which tends to the delta potential as eps -> 0.
SMatrix delta_as_well_limit(double alpha, Energy energy, double eps, int steps = kDefaultSteps);

}  // namespace symscat
