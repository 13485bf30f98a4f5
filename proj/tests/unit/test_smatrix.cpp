#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "symscat/smatrix.hpp"

namespace symscat {
namespace {

const cplx kI{0.0, 1.0};

double entry_gap(const SMatrix& s, const oracle::Scattering& o) {
  return std::max(std::abs(s.s11 - o.r), std::abs(s.s21 - o.t));
}

TEST(Amplitudes, PlaneWaves) {
  const double a = 1.0;
  const WaveNumber k(1.0);
  const auto right = amplitudes_from_boundary(
      {std::exp(-kI * a), kI * std::exp(-kI * a), std::exp(kI * a), kI * std::exp(kI * a)}, k, a);
  EXPECT_LT(std::abs(right.A - 1.0) + std::abs(right.B) + std::abs(right.C - 1.0) + std::abs(right.D), 1e-15);

  const auto left = amplitudes_from_boundary(
      {std::exp(kI * a), -kI * std::exp(kI * a), std::exp(-kI * a), -kI * std::exp(-kI * a)}, k, a);
  EXPECT_LT(std::abs(left.A) + std::abs(left.B - 1.0) + std::abs(left.C) + std::abs(left.D - 1.0), 1e-15);
}

TEST(Amplitudes, StandingCosine) {
  const double a = 1.0;
  const auto q = amplitudes_from_boundary({std::cos(a), std::sin(a), std::cos(a), -std::sin(a)}, WaveNumber(1.0), a);
  for (cplx z : {q.A, q.B, q.C, q.D}) EXPECT_LT(std::abs(z - 0.5), 1e-15);
}

TEST(Transfer, FreeIsIdentityLikeSwap) {
  const auto s = smatrix_via_transfer(validate(SquareWell{0.0, 1.0}), Energy(1.0));
  EXPECT_LT(std::abs(s.s11), 1e-9);
  EXPECT_LT(std::abs(s.s12 - 1.0), 1e-9);
}

TEST(Transfer, DeterminantIsOne) {
  const auto t = transfer_matrix(validate(SquareWell{2.0, 1.0}), Energy(1.0));
  EXPECT_LT(std::abs(t.det() - 1.0), 1e-9);
}

TEST(Transfer, MatchesAnalyticWell) {
  const auto pot = validate(SquareWell{2.0, 1.0});
  const auto s = smatrix_via_transfer(pot, Energy(1.0));
  EXPECT_LT(s.max_entry_diff(analytic_square_well(2.0, 1.0, Energy(1.0))), 1e-6);
  EXPECT_LT(s.unitarity_residual(), 1e-8);
  EXPECT_LT(s.parity_residual, 1e-8);
}

TEST(Transfer, GaussianWellInvariantsAndConvergence) {
  std::vector<double> v;
  for (double x : symmetric_grid(1.0, 4096)) v.push_back(-2.0 * std::exp(-8.0 * x * x));
  const auto pot = validate(sampled_on_grid(1.0, v));
  const auto coarse = smatrix_via_transfer(pot, Energy(1.0), 4096);
  const auto fine = smatrix_via_transfer(pot, Energy(1.0), 8192);
  EXPECT_LT(coarse.unitarity_residual(), 1e-8);
  EXPECT_LT(coarse.parity_residual, 1e-8);
  EXPECT_LT(coarse.max_entry_diff(fine), 1e-6);
}

TEST(BoundaryRoute, FreeQuad) {
  const auto s = smatrix_via_eq11(AmplitudeQuad{1.0, 0.0, 1.0, 0.0}, WaveNumber(1.0), 1.0);
  EXPECT_EQ(s.s11, cplx(0.0));
  EXPECT_EQ(s.s12, cplx(1.0));
}

TEST(BoundaryRoute, StandingWaveIsSingular) {
  EXPECT_SYMSCAT_ERROR(smatrix_via_eq11(AmplitudeQuad{0.5, 0.5, 0.5, 0.5}, WaveNumber(1.0), 1.0),
                       ErrorCode::kSingularSystem);
}

TEST(BoundaryRoute, TwoQuadsMatchTransfer) {
  const auto pot = validate(SquareWell{2.0, 1.0});
  const Energy e(1.0);
  const auto k = wavenumber_from_energy(e);
  const auto [u1, u2] = fundamental_pair(pot, e);
  const auto s = smatrix_via_eq11(amplitudes_from_boundary(u1.boundary(), k, 1.0),
                                  amplitudes_from_boundary(u2.boundary(), k, 1.0), k, 1.0);
  EXPECT_LT(s.max_entry_diff(smatrix_via_transfer(pot, e)), 1e-9);
}

TEST(BoundaryRoute, ParallelQuadsAreSingular) {
  const AmplitudeQuad q{1.0, 0.3, 0.2, 0.5};
  const AmplitudeQuad twice{2.0, 0.6, 0.4, 1.0};
  EXPECT_SYMSCAT_ERROR(smatrix_via_eq11(q, twice, WaveNumber(1.0), 1.0), ErrorCode::kSingularSystem);
}

TEST(AnalyticWell, FreeAndResonance) {
  const auto free = analytic_square_well(0.0, 1.0, Energy(1.0));
  EXPECT_LT(std::abs(free.s11), 1e-15);
  EXPECT_LT(std::abs(free.s12 - 1.0), 1e-15);

  // 2 l a = pi
  const double v0 = std::numbers::pi * std::numbers::pi / 4.0 - 1.0;
  const auto res = analytic_square_well(v0, 1.0, Energy(1.0));
  EXPECT_LT(std::abs(res.s11), 1e-15);
  EXPECT_NEAR(std::abs(res.s21), 1.0, 1e-15);
}

TEST(AnalyticWell, UnitaryAndMatchesPlaneWaveMatching) {
  for (double v0 : {0.5, 2.0, 10.0}) {
    for (double a : {0.5, 1.0}) {
      for (double e : {0.25, 1.0, 4.0}) {
        const auto s = analytic_square_well(v0, a, Energy(e));
        EXPECT_NEAR(std::norm(s.s11) + std::norm(s.s21), 1.0, 1e-12);
        EXPECT_LT(entry_gap(s, oracle::square_well_matching(v0, a, e)), 1e-12);
      }
    }
  }
}

TEST(AnalyticWell, ContinuousInDepth) {
  const auto s0 = analytic_square_well(0.0, 1.0, Energy(1.0));
  for (double v0 : {1e-3, 1e-4, 1e-5}) {
    EXPECT_LT(analytic_square_well(v0, 1.0, Energy(1.0)).max_entry_diff(s0), 2.0 * v0);
  }
}

TEST(AnalyticDelta, UnitBeta) {
  const auto s = analytic_delta(2.0, Energy(1.0));
  EXPECT_LT(std::abs(s.s11 - cplx(-0.5, 0.5)), 1e-15);
  EXPECT_NEAR(std::norm(s.s11), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(s.s21), 0.5, 1e-15);
}

TEST(AnalyticDelta, MatchesJumpCondition) {
  for (double alpha : {1e-6, 0.5, 2.0, 7.0}) {
    for (double e : {0.1, 1.0, 9.0}) {
      const auto s = analytic_delta(alpha, Energy(e));
      EXPECT_LT(entry_gap(s, oracle::delta_matching(alpha, e)), 1e-14);
      EXPECT_NEAR(std::norm(s.s11) + std::norm(s.s21), 1.0, 1e-15);
    }
  }
  const auto weak = analytic_delta(1e-12, Energy(1.0));
  EXPECT_LT(std::abs(weak.s12 - 1.0), 1e-11);
}

TEST(DeltaLimit, ConvergesAtFirstOrder) {
  const auto exact = analytic_delta(2.0, Energy(1.0));
  const double e2 = delta_as_well_limit(2.0, Energy(1.0), 1e-2).max_entry_diff(exact);
  const double e3 = delta_as_well_limit(2.0, Energy(1.0), 1e-3).max_entry_diff(exact);
  EXPECT_LT(e3, 1e-3);
  EXPECT_GT(e2 / e3, 5.0);
  EXPECT_LT(e2 / e3, 20.0);
}

TEST(DeltaLimit, Guards) {
  EXPECT_SYMSCAT_ERROR(delta_as_well_limit(2.0, Energy(1.0), 0.2), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(delta_as_well_limit(2.0, Energy(1.0), 0.0), ErrorCode::kPreconditionViolated);
}

}  // namespace
}  // namespace symscat
