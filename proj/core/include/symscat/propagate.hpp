#pragma once

#include <utility>
#include <vector>

#include "symscat/core.hpp"
#include "symscat/potential.hpp"

namespace symscat {

inline constexpr int kDefaultSteps = 4096;
inline constexpr int kMinSteps = 64;

/// Interior solution and slope at the matching points x = -a and x = a.
struct BoundaryData {
  cplx psi_left;
  cplx dpsi_left;
  cplx psi_right;
  cplx dpsi_right;
};

/// Solution of psi'' = (V - E) psi sampled on the symmetric grid over [-a, a].
struct WaveTrace {
  std::vector<double> x;
  std::vector<cplx> psi;
  std::vector<cplx> dpsi;
  Energy energy{1.0};

  double half_width() const { return x.back(); }
  BoundaryData boundary() const { return {psi.front(), dpsi.front(), psi.back(), dpsi.back()}; }
};

/// Numerov integration from x = -a with psi(-a) = psi0, psi'(-a) = dpsi0.
///
/// The potential is read at the `steps + 1` grid nodes x_i = a(2i - N)/N. The
/// second start value comes from a fifth-order Taylor expansion; slopes are
/// recovered afterwards with fourth-order finite differences (one-sided at the
/// ends). Throws Overflow once |psi| exceeds 1e150.
WaveTrace integrate(const EvaluatedPotential& pot, Energy energy, cplx psi0, cplx dpsi0,
                    int steps = kDefaultSteps);

/// u1 with (psi, psi')(-a) = (1, 0) and u2 with (0, 1).
std::pair<WaveTrace, WaveTrace> fundamental_pair(const EvaluatedPotential& pot, Energy energy,
                                                 int steps = kDefaultSteps);

/// Fourth-order first derivative of uniformly spaced samples.
std::vector<cplx> differentiate(const std::vector<cplx>& f, double h);

}  // namespace symscat
