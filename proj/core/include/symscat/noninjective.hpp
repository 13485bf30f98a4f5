#pragma once

#include <vector>

#include "symscat/core.hpp"
#include "symscat/propagate.hpp"
#include "symscat/smatrix.hpp"

namespace symscat {

inline constexpr double kNodeTolerance = 1e-6;
inline constexpr int kCounterexampleSteps = 8192;

/// Symmetric perturbation vanishing with its slope at x = +-a.
struct BumpFunction {
  enum class Kind {
    /// eps (|x| - a)^2: slope jumps by 4 eps a across x = 0.
    kPaperLiteral,
    /// eps (x^2 - a^2)^2: smooth.
    kSmooth,
  };

  Kind kind = Kind::kSmooth;
  double half_width = 1.0;
  double amplitude = 0.0;

  double value(double x) const;
  double slope(double x) const;
  /// True when the first derivative is discontinuous at the origin.
  bool has_kink() const { return kind == Kind::kPaperLiteral && amplitude != 0.0; }
};

/// Potential recovered pointwise from a real interior wavefunction.
struct RecoveredPotential {
  std::vector<double> x;
  std::vector<double> v;
  /// Grid points where |psi| < node_tol * max|psi| (values there are NaN).
  std::vector<bool> masked;

  std::size_t masked_count() const;
  /// Copy with masked entries linearly interpolated from unmasked neighbours.
  std::vector<double> filled() const;
};

/// V(x_i) = E + psi''(x_i) / psi(x_i), psi'' by fourth-order finite
/// differences (one-sided near the ends). Throws ComplexWavefunction unless
/// Im psi is negligible and AllMasked if fewer than two points survive.
RecoveredPotential recover_potential(const WaveTrace& trace, Energy energy,
                                     double node_tol = kNodeTolerance);

struct CounterexamplePair {
  WaveTrace baseline_trace;
  RecoveredPotential baseline_potential;
  WaveTrace perturbed_trace;
  RecoveredPotential perturbed_potential;
  BumpFunction bump;
  Energy energy{1.0};
  double q = 0.0;
  /// max_x |V(x) - V0(x)|
  double separation = 0.0;
  /// Largest difference between the eight matching-point values (psi, psi'
  /// at -a and a) of the two wavefunctions.
  double boundary_residual = 0.0;
};

/// Baseline psi0 = cos(q x), perturbed psi = psi0 + f, both on the symmetric
/// grid with `grid_steps` intervals. Requires q a < pi/2 so psi0 has no node.
CounterexamplePair build_counterexample(double q, double eps, double half_width,
                                        BumpFunction::Kind bump = BumpFunction::Kind::kSmooth,
                                        Energy energy = Energy(1.0), int grid_steps = kCounterexampleSteps);

struct SameSMatrixReport {
  SMatrix baseline;
  SMatrix perturbed;
  double energy = 0.0;
  double max_entry_diff = 0.0;
  /// |(s11 + s12) - (s11' + s12')|: the even-parity eigenvalue of S.
  double even_channel_diff = 0.0;
  /// |(s11 - s12) - (s11' - s12')|: the odd-parity eigenvalue of S.
  double odd_channel_diff = 0.0;
  /// Largest difference of the exterior amplitudes (A, B, C, D) of the two constructed
  /// wavefunctions at this energy.
  double amplitude_diff = 0.0;
};

/// Forward-solves both recovered potentials (masked points filled) with the
/// transfer route. `energy` defaults to the pair's construction energy.
SameSMatrixReport verify_same_smatrix(const CounterexamplePair& pair, int steps = kCounterexampleSteps);
SameSMatrixReport verify_same_smatrix(const CounterexamplePair& pair, int steps, Energy energy);

}  // namespace symscat
