#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "symscat/spectral.hpp"
#include "symscat/szego.hpp"

namespace symscat {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ArcSymbol, CoefficientsMatchQuadrature) {
  for (double alpha : {0.1, kPi / 4, kPi / 2, 3.0}) {
    const ArcSymbol s{alpha};
    for (int m = 0; m < 12; ++m) EXPECT_NEAR(s.coefficient(m), oracle::arc_fourier_coefficient(alpha, m), 1e-13);
  }
}

TEST(Toeplitz, OneByOne) {
  for (double alpha : {1e-8, 0.5, kPi / 2, 3.0}) {
    EXPECT_NEAR(toeplitz_log_det(ArcSymbol{alpha}, 1).log_det, std::log(1.0 - alpha / kPi), 1e-14);
  }
}

TEST(Toeplitz, NearIdentitySymbol) {
  // For small alpha, T = I - (alpha/pi) J + O(alpha^3) with J the all-ones matrix.
  const double alpha = 1e-8;
  for (int n : {2, 8, 64}) {
    const double ld = toeplitz_log_det(ArcSymbol{alpha}, n).log_det;
    EXPECT_NEAR(ld, std::log1p(-n * alpha / kPi), 1e-14);
    EXPECT_LT(std::abs(ld), 1e-6);
  }
}

TEST(Toeplitz, MatchesLongDoubleOracle) {
  for (double alpha : {0.3, kPi / 2, 2.5}) {
    for (int n : {2, 5, 8}) {
      const double ref = static_cast<double>(oracle::toeplitz_log_det_ld(alpha, n));
      EXPECT_NEAR(toeplitz_log_det(ArcSymbol{alpha}, n).log_det, ref, 1e-7 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST(Toeplitz, HighPrecisionReferenceValues) {
  // 60-digit values for alpha = pi/2.
  const std::pair<int, double> ref[] = {
      {8, -23.052170049622887}, {16, -89.76778223385246}, {32, -356.1096328834057}, {64, -1420.9570005083644}};
  for (const auto& [n, value] : ref) {
    const auto r = toeplitz_log_det(ArcSymbol{kPi / 2}, n);
    EXPECT_NEAR(r.log_det, value, 1e-9 * std::abs(value)) << "n=" << n;
  }
}

TEST(Toeplitz, EscalatesPrecisionWhenDoubleFails) {
  // Double and 50 digits agree at n = 8; double Cholesky breaks down by n = 32.
  EXPECT_EQ(toeplitz_log_det(ArcSymbol{kPi / 2}, 8).digits, 50);
  EXPECT_GT(toeplitz_log_det(ArcSymbol{kPi / 2}, 32).digits, 50);
}

TEST(Toeplitz, ResidualShrinks) {
  double prev = 1.0;
  for (int n : {8, 16, 32, 64}) {
    const auto r = toeplitz_log_det(ArcSymbol{kPi / 2}, n);
    EXPECT_NEAR(r.residual, r.log_det - toeplitz_asymptotic(kPi / 2, n), 1e-12);
    EXPECT_LT(std::abs(r.residual), prev);
    prev = std::abs(r.residual);
  }
  EXPECT_LE(prev, 0.1);
}

TEST(Toeplitz, Guards) {
  EXPECT_SYMSCAT_ERROR(toeplitz_log_det(ArcSymbol{0.0}, 4), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(toeplitz_log_det(ArcSymbol{kPi}, 4), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(toeplitz_log_det(ArcSymbol{1.0}, 0), ErrorCode::kPreconditionViolated);
}

TEST(SzegoLimit, GapShrinksAsNDoubles) {
  double prev = 1.0;
  for (int n : {32, 64, 128}) {
    const auto r = szego_limit_check(2.0 * kPi * 2.0 / n, n, 2.0);
    EXPECT_LT(std::abs(r.gap_to_fredholm), prev);
    prev = std::abs(r.gap_to_fredholm);
  }
  EXPECT_LT(prev, 0.01);
}

TEST(SzegoLimit, ReportedGaps) {
  // Frozen from the first verified run; at fixed alpha = pi/8 the gap grows with t.
  const auto r1 = szego_limit_check(kPi / 8, 16, 1.0);
  const auto r2 = szego_limit_check(kPi / 8, 32, 2.0);
  EXPECT_NEAR(r1.toeplitz_log_det, -5.686351943820687, 1e-9);
  EXPECT_NEAR(r1.gap_to_asymptotic, -0.02687, 1e-4);
  EXPECT_NEAR(r2.gap_to_asymptotic, -0.12576, 1e-4);
  EXPECT_NEAR(r1.continuum_asymptotic,
              asymptotic_log_det(Parity::kEven, 1.0) + asymptotic_log_det(Parity::kOdd, 1.0), 1e-12);
}

TEST(SzegoLimit, Guards) {
  EXPECT_SYMSCAT_ERROR(szego_limit_check(kPi / 8, 17, 1.0), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(szego_limit_check(kPi / 2, 16, 4.0), ErrorCode::kPreconditionViolated);
}

}  // namespace
}  // namespace symscat
