#include "symscat/noninjective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symscat/potential.hpp"

namespace symscat {
namespace {

constexpr double kImagTol = 1e-12;

// Fourth-order second derivative; interior terms are paired so mirror-image
// grid points see bit-identical arithmetic.
std::vector<double> second_derivative(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  const std::size_t m = n - 1;
  std::vector<double> d(n);
  const double s = 1.0 / (12.0 * h * h);
  d[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]) * s;
  d[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) * s;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    d[i] = (16.0 * (f[i - 1] + f[i + 1]) - (f[i - 2] + f[i + 2]) - 30.0 * f[i]) * s;
  }
  d[m - 1] = (10.0 * f[m] - 15.0 * f[m - 1] - 4.0 * f[m - 2] + 14.0 * f[m - 3] - 6.0 * f[m - 4] + f[m - 5]) * s;
  d[m] = (45.0 * f[m] - 154.0 * f[m - 1] + 214.0 * f[m - 2] - 156.0 * f[m - 3] + 61.0 * f[m - 4] - 10.0 * f[m - 5]) * s;
  return d;
}

WaveTrace analytic_trace(double q, const BumpFunction& bump, double a, Energy energy, int steps) {
  WaveTrace t;
  t.energy = energy;
  t.x = symmetric_grid(a, steps);
  t.psi.resize(t.x.size());
  t.dpsi.resize(t.x.size());
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    const double x = t.x[i];
    t.psi[i] = std::cos(q * x) + bump.value(x);
    t.dpsi[i] = -q * std::sin(q * x) + bump.slope(x);
  }
  return t;
}

double boundary_gap(const BoundaryData& l, const BoundaryData& r) {
  return std::max({std::abs(l.psi_left - r.psi_left), std::abs(l.dpsi_left - r.dpsi_left),
                   std::abs(l.psi_right - r.psi_right), std::abs(l.dpsi_right - r.dpsi_right)});
}

}  // namespace

double BumpFunction::value(double x) const {
  const double a = half_width;
  if (kind == Kind::kSmooth) {
    const double u = x * x - a * a;
    return amplitude * u * u;
  }
  const double u = std::abs(x) - a;
  return amplitude * u * u;
}

double BumpFunction::slope(double x) const {
  const double a = half_width;
  if (kind == Kind::kSmooth) return 4.0 * amplitude * x * (x * x - a * a);
  // Right-sided derivative at the origin.
  return x >= 0.0 ? 2.0 * amplitude * (x - a) : 2.0 * amplitude * (x + a);
}

std::size_t RecoveredPotential::masked_count() const {
  return static_cast<std::size_t>(std::count(masked.begin(), masked.end(), true));
}

std::vector<double> RecoveredPotential::filled() const {
  std::vector<double> out = v;
  const std::size_t n = out.size();
  std::size_t prev = n;  // last unmasked index, n = none yet
  for (std::size_t i = 0; i < n; ++i) {
    if (masked[i]) continue;
    if (prev == n) {
      for (std::size_t j = 0; j < i; ++j) out[j] = v[i];
    } else if (i > prev + 1) {
      for (std::size_t j = prev + 1; j < i; ++j) {
        const double frac = (x[j] - x[prev]) / (x[i] - x[prev]);
        out[j] = v[prev] + frac * (v[i] - v[prev]);
      }
    }
    prev = i;
  }
  for (std::size_t j = prev + 1; j < n; ++j) out[j] = v[prev];
  return out;
}

RecoveredPotential recover_potential(const WaveTrace& trace, Energy energy, double node_tol) {
  const std::size_t n = trace.psi.size();
  require(n >= 6 && trace.x.size() == n, ErrorCode::kPreconditionViolated, "trace needs at least 6 points");
  double peak = 0.0;
  for (const auto& p : trace.psi) peak = std::max(peak, std::abs(p));
  std::vector<double> psi(n);
  for (std::size_t i = 0; i < n; ++i) {
    require(std::abs(trace.psi[i].imag()) <= kImagTol * std::max(peak, 1e-300), ErrorCode::kComplexWavefunction,
            "psi must be real to recover a real potential");
    psi[i] = trace.psi[i].real();
  }

  const double h = (trace.x.back() - trace.x.front()) / static_cast<double>(n - 1);
  const auto d2 = second_derivative(psi, h);

  RecoveredPotential out;
  out.x = trace.x;
  out.v.resize(n);
  out.masked.resize(n);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.masked[i] = std::abs(psi[i]) < node_tol * peak;
    if (out.masked[i]) {
      out.v[i] = std::numeric_limits<double>::quiet_NaN();
    } else {
      out.v[i] = energy.value() + d2[i] / psi[i];
      ++kept;
    }
  }
  require(kept >= 2, ErrorCode::kAllMasked, "psi vanishes on (almost) the whole grid");
  return out;
}

CounterexamplePair build_counterexample(double q, double eps, double a, BumpFunction::Kind kind, Energy energy,
                                        int grid_steps) {
  require(a > 0.0 && std::isfinite(a), ErrorCode::kPreconditionViolated, "half-width must be positive");
  require(q > 0.0 && q * a < 0.5 * constants::pi, ErrorCode::kPreconditionViolated,
          "need 0 < q a < pi/2 so that cos(q x) has no node on [-a, a]");
  require(std::isfinite(eps), ErrorCode::kPreconditionViolated, "eps must be finite");

  CounterexamplePair pair;
  pair.q = q;
  pair.energy = energy;
  pair.bump = BumpFunction{kind, a, eps};
  pair.baseline_trace = analytic_trace(q, BumpFunction{kind, a, 0.0}, a, energy, grid_steps);
  pair.perturbed_trace = analytic_trace(q, pair.bump, a, energy, grid_steps);

  double peak = 0.0;
  for (const auto& p : pair.perturbed_trace.psi) peak = std::max(peak, std::abs(p));
  for (const auto& p : pair.perturbed_trace.psi) {
    require(p.real() > kNodeTolerance * peak, ErrorCode::kNodeCollision,
            "perturbed wavefunction has a node; reduce eps");
  }

  pair.baseline_potential = recover_potential(pair.baseline_trace, energy);
  pair.perturbed_potential = recover_potential(pair.perturbed_trace, energy);
  for (std::size_t i = 0; i < pair.baseline_potential.v.size(); ++i) {
    pair.separation = std::max(pair.separation,
                               std::abs(pair.perturbed_potential.v[i] - pair.baseline_potential.v[i]));
  }
  pair.boundary_residual = boundary_gap(pair.baseline_trace.boundary(), pair.perturbed_trace.boundary());
  return pair;
}

SameSMatrixReport verify_same_smatrix(const CounterexamplePair& pair, int steps) {
  return verify_same_smatrix(pair, steps, pair.energy);
}

SameSMatrixReport verify_same_smatrix(const CounterexamplePair& pair, int steps, Energy energy) {
  const double a = pair.baseline_trace.half_width();
  const auto v0 = validate(sampled_on_grid(a, pair.baseline_potential.filled()));
  const auto v1 = validate(sampled_on_grid(a, pair.perturbed_potential.filled()));

  SameSMatrixReport r;
  r.energy = energy.value();
  r.baseline = smatrix_via_transfer(v0, energy, steps);
  r.perturbed = smatrix_via_transfer(v1, energy, steps);
  r.max_entry_diff = r.baseline.max_entry_diff(r.perturbed);
  r.even_channel_diff = std::abs((r.baseline.s11 + r.baseline.s12) - (r.perturbed.s11 + r.perturbed.s12));
  r.odd_channel_diff = std::abs((r.baseline.s11 - r.baseline.s12) - (r.perturbed.s11 - r.perturbed.s12));

  const auto k = wavenumber_from_energy(energy);
  const auto qa = amplitudes_from_boundary(pair.baseline_trace.boundary(), k, a);
  const auto qb = amplitudes_from_boundary(pair.perturbed_trace.boundary(), k, a);
  r.amplitude_diff = std::max({std::abs(qa.A - qb.A), std::abs(qa.B - qb.B), std::abs(qa.C - qb.C),
                               std::abs(qa.D - qb.D)});
  return r;
}

}  // namespace symscat
