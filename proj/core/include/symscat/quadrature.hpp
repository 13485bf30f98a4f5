#pragma once

#include <vector>

namespace symscat {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [lo, hi], nodes ascending.
QuadratureRule gauss_legendre(int n, double lo, double hi);

}  // namespace symscat
