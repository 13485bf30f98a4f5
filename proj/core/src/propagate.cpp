#include "symscat/propagate.hpp"

#include <cmath>

namespace symscat {
namespace {

constexpr double kOverflowMagnitude = 1e150;

}  // namespace

std::vector<cplx> differentiate(const std::vector<cplx>& f, double h) {
  const std::size_t n = f.size();
  require(n >= 5, ErrorCode::kPreconditionViolated, "need at least 5 samples to differentiate");
  std::vector<cplx> d(n);
  const double s = 1.0 / (12.0 * h);
  d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
  d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = ((f[i - 2] - f[i + 2]) + 8.0 * (f[i + 1] - f[i - 1])) * s;
  }
  const std::size_t m = n - 1;
  d[m - 1] = (3.0 * f[m] + 10.0 * f[m - 1] - 18.0 * f[m - 2] + 6.0 * f[m - 3] - f[m - 4]) * s;
  d[m] = (25.0 * f[m] - 48.0 * f[m - 1] + 36.0 * f[m - 2] - 16.0 * f[m - 3] + 3.0 * f[m - 4]) * s;
  return d;
}

WaveTrace integrate(const EvaluatedPotential& pot, Energy energy, cplx psi0, cplx dpsi0, int steps) {
  require(steps >= kMinSteps, ErrorCode::kPreconditionViolated,
          "steps must be >= " + std::to_string(kMinSteps));
  require(steps % 2 == 0, ErrorCode::kPreconditionViolated, "steps must be even");
  require(!pot.is_delta(), ErrorCode::kPreconditionViolated, "delta potentials have no interior region");

  const double a = pot.half_width();
  const double h = 2.0 * a / steps;
  const double h2 = h * h;
  const auto n = static_cast<std::size_t>(steps);

  WaveTrace trace;
  trace.energy = energy;
  trace.x = symmetric_grid(a, steps);
  std::vector<double> g(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    g[i] = pot(trace.x[i]) - energy.value();
    require(std::isfinite(g[i]), ErrorCode::kNonFiniteSample, "potential is not finite on the grid");
  }

  trace.psi.resize(n + 1);
  trace.psi[0] = psi0;

  // psi(x0 + h) by Taylor expansion of psi'' = g psi through h^5; g' and g''
  // are one-sided differences on the grid.
  const double g0 = g[0];
  const double g1 = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * h);
  const double g2 = (g[0] - 2.0 * g[1] + g[2]) / h2;
  const cplx d2 = g0 * psi0;
  const cplx d3 = g1 * psi0 + g0 * dpsi0;
  const cplx d4 = (g2 + g0 * g0) * psi0 + 2.0 * g1 * dpsi0;
  const cplx d5 = 4.0 * g0 * g1 * psi0 + (3.0 * g2 + g0 * g0) * dpsi0;
  trace.psi[1] = psi0 + h * (dpsi0 + h * (d2 / 2.0 + h * (d3 / 6.0 + h * (d4 / 24.0 + h * d5 / 120.0))));

  const double c = h2 / 12.0;
  for (std::size_t i = 1; i < n; ++i) {
    const cplx next = (2.0 * (1.0 + 5.0 * c * g[i]) * trace.psi[i] - (1.0 - c * g[i - 1]) * trace.psi[i - 1]) /
                      (1.0 - c * g[i + 1]);
    if (!(std::abs(next) <= kOverflowMagnitude)) {
      throw Error(ErrorCode::kOverflow, "|psi| exceeded 1e150 at x = " + std::to_string(trace.x[i + 1]));
    }
    trace.psi[i + 1] = next;
  }

  trace.dpsi = differentiate(trace.psi, h);
  trace.dpsi[0] = dpsi0;
  return trace;
}

std::pair<WaveTrace, WaveTrace> fundamental_pair(const EvaluatedPotential& pot, Energy energy, int steps) {
  return {integrate(pot, energy, 1.0, 0.0, steps), integrate(pot, energy, 0.0, 1.0, steps)};
}

}  // namespace symscat
