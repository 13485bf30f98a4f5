#include "symscat/quadrature.hpp"

#include <cmath>

#include "symscat/core.hpp"

namespace symscat {

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  require(n >= 1, ErrorCode::kPreconditionViolated, "quadrature order must be positive");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);

  // Roots are symmetric; find the upper half by Newton iteration on P_n.
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-16) break;
    }
    // Recompute P_n' at the converged root for the weight.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo_idx = static_cast<std::size_t>(i);
    const auto hi_idx = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo_idx] = mid - half * z;
    rule.nodes[hi_idx] = mid + half * z;
    rule.weights[lo_idx] = rule.weights[hi_idx] = half * w;
  }
  return rule;
}

}  // namespace symscat
