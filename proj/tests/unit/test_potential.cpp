#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "symscat/potential.hpp"

namespace symscat {
namespace {

Sampled from_function(double a, int n, double (*f)(double)) {
  Sampled s;
  s.half_width = a;
  s.x = symmetric_grid(a, n - 1);
  for (double x : s.x) s.v.push_back(f(x));
  return s;
}

TEST(Potential, SquareWellEvaluator) {
  const auto p = validate(SquareWell{2.0, 1.0});
  EXPECT_EQ(p(0.0), -2.0);
  EXPECT_EQ(p(1.0), -2.0);  // edge takes the interior value
  EXPECT_EQ(p(-1.0), -2.0);
  EXPECT_EQ(p(1.5), 0.0);
  EXPECT_EQ(p.half_width(), 1.0);
}

TEST(Potential, SampledQuadraticInterpolates) {
  const auto p = validate(from_function(1.0, 101, [](double x) { return x * x; }));
  EXPECT_NEAR(p(0.5), 0.25, 1e-4);
  EXPECT_NEAR(p(-0.505), 0.505 * 0.505, 1e-4);
}

TEST(Potential, RejectsAntisymmetric) {
  EXPECT_SYMSCAT_ERROR(validate(from_function(1.0, 101, [](double x) { return x; })),
                       ErrorCode::kAsymmetricPotential);
}

TEST(Potential, RejectsNonFiniteAndNonUniform) {
  auto s = from_function(1.0, 11, [](double x) { return x * x; });
  s.v[3] = std::nan("");
  EXPECT_SYMSCAT_ERROR(validate(s), ErrorCode::kNonFiniteSample);

  auto u = from_function(1.0, 11, [](double x) { return x * x; });
  u.x[2] += 0.01;
  u.x[8] -= 0.01;
  EXPECT_SYMSCAT_ERROR(validate(u), ErrorCode::kNonUniformGrid);
}

TEST(Potential, RejectsBadAnalyticParameters) {
  EXPECT_SYMSCAT_ERROR(validate(SquareWell{-1.0, 1.0}), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(validate(SquareWell{1.0, 0.0}), ErrorCode::kPreconditionViolated);
  EXPECT_SYMSCAT_ERROR(validate(Delta{0.0}), ErrorCode::kPreconditionViolated);
}

TEST(Potential, DeltaHasNoPointwiseValue) {
  const auto p = validate(Delta{1.0});
  EXPECT_TRUE(p.is_delta());
  EXPECT_SYMSCAT_ERROR(p(0.0), ErrorCode::kPreconditionViolated);
}

TEST(Potential, SampleAnalyticWell) {
  const auto s = sample_analytic(SquareWell{2.0, 1.0}, 5);
  const std::vector<double> xs{-1.0, -0.5, 0.0, 0.5, 1.0};
  ASSERT_EQ(s.x.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_DOUBLE_EQ(s.x[i], xs[i]);
    EXPECT_EQ(s.v[i], -2.0);
  }
  for (double v : sample_analytic(SquareWell{0.0, 1.0}, 5).v) EXPECT_EQ(v, 0.0);
  EXPECT_SYMSCAT_ERROR(sample_analytic(Delta{1.0}, 17), ErrorCode::kDeltaNotSamplable);
  EXPECT_SYMSCAT_ERROR(sample_analytic(SquareWell{1.0, 1.0}, 4), ErrorCode::kPreconditionViolated);
}

TEST(Potential, SampleRoundTripsAtNodes) {
  const auto s = sample_analytic(SquareWell{3.0, 0.7}, 33);
  const auto p = validate(s);
  for (std::size_t i = 0; i < s.x.size(); ++i) EXPECT_EQ(p(s.x[i]), -3.0);
}

TEST(Potential, EvaluatorIsMirrorSymmetric) {
  const auto p = validate(oracle::random_symmetric_potential(7));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-p.half_width(), p.half_width());
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_NEAR(p(x), p(-x), 1e-10);
  }
}

TEST(Potential, CsvRoundTrip) {
  std::istringstream in("x,V\n-1,3\n-0.5,1\n0,0\n0.5,1\n1,3\n");
  const auto s = read_potential_csv(in);
  EXPECT_DOUBLE_EQ(s.half_width, 1.0);
  ASSERT_EQ(s.v.size(), 5u);
  EXPECT_EQ(s.v[1], 1.0);
  EXPECT_NO_THROW(validate(s));
}

TEST(Potential, CsvRequiresHeader) {
  std::istringstream in("x,U\n-1,0\n0,0\n1,0\n");
  EXPECT_SYMSCAT_ERROR(read_potential_csv(in), ErrorCode::kInvalidInput);
}

}  // namespace
}  // namespace symscat
