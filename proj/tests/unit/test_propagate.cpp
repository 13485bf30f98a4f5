#include <gtest/gtest.h>

#include <cmath>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "symscat/propagate.hpp"

namespace symscat {
namespace {

const cplx kI{0.0, 1.0};

TEST(Propagate, FreePlaneWave) {
  const auto free = validate(SquareWell{0.0, 1.0});
  const auto tr = integrate(free, Energy(1.0), 1.0, kI);
  EXPECT_LT(std::abs(tr.psi.back() - std::exp(2.0 * kI)), 1e-8);
  EXPECT_LT(std::abs(tr.dpsi.back() - kI * std::exp(2.0 * kI)), 1e-8);
  EXPECT_DOUBLE_EQ(tr.x.front(), -1.0);
  EXPECT_DOUBLE_EQ(tr.x.back(), 1.0);
}

TEST(Propagate, SampledWellCosine) {
  const auto well = validate(sample_analytic(SquareWell{2.0, 1.0}, 1025));
  const auto tr = integrate(well, Energy(1.0), 1.0, 0.0);
  EXPECT_NEAR(tr.psi.back().real(), std::cos(2.0 * std::sqrt(3.0)), 1e-7);
  EXPECT_NEAR(tr.psi.back().imag(), 0.0, 1e-15);
}

TEST(Propagate, StepGuards) {
  const auto free = validate(SquareWell{0.0, 1.0});
  EXPECT_SYMSCAT_ERROR(integrate(free, Energy(1.0), 1.0, 0.0, 32), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(integrate(free, Energy(1.0), 1.0, 0.0, 101), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(integrate(validate(Delta{1.0}), Energy(1.0), 1.0, 0.0), ErrorCode::kPreconditionViolated);
}

TEST(Propagate, OverflowInForbiddenRegion) {
  // Barrier of height 1e6 over width 2: growth like e^{2000}.
  std::vector<double> v(65, 1e6);
  const auto barrier = validate(sampled_on_grid(1.0, v));
  EXPECT_SYMSCAT_ERROR(integrate(barrier, Energy(1.0), 1.0, 0.0, 4096), ErrorCode::kOverflow);
}

TEST(Propagate, FreeFundamentalPair) {
  const auto free = validate(SquareWell{0.0, 1.0});
  const double k = 1.0;
  const auto [u1, u2] = fundamental_pair(free, Energy(1.0));
  for (std::size_t i = 0; i < u1.x.size(); i += 97) {
    const double s = u1.x[i] + 1.0;
    EXPECT_NEAR(u1.psi[i].real(), std::cos(k * s), 1e-9);
    EXPECT_NEAR(u2.psi[i].real(), std::sin(k * s) / k, 1e-9);
  }
}

TEST(Propagate, SquareWellPairEndpoint) {
  const auto well = validate(SquareWell{2.0, 1.0});
  const auto [u1, u2] = fundamental_pair(well, Energy(1.0));
  EXPECT_NEAR(u1.psi.back().real(), std::cos(2.0 * std::sqrt(3.0)), 1e-7);
  const cplx w = u1.psi.back() * u2.dpsi.back() - u1.dpsi.back() * u2.psi.back();
  EXPECT_NEAR(std::abs(w - 1.0), 0.0, 1e-9);
}

TEST(Propagate, DifferentiateIsFourthOrder) {
  auto err = [](int n) {
    const double h = 2.0 / n;
    std::vector<cplx> f(n + 1);
    for (int i = 0; i <= n; ++i) f[i] = std::sin(-1.0 + i * h);
    const auto d = differentiate(f, h);
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(d[i] - std::cos(-1.0 + i * h)));
    return worst;
  };
  const double ratio = err(64) / err(128);
  EXPECT_GT(ratio, 12.0);
  EXPECT_LT(ratio, 20.0);
}

}  // namespace
}  // namespace symscat
