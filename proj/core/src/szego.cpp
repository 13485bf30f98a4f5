#include "symscat/szego.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <optional>
#include <vector>

#include "symscat/spectral.hpp"

namespace symscat {
namespace {

namespace mp = boost::multiprecision;

template <unsigned Digits>
using Wide = mp::number<mp::cpp_bin_float<Digits>, mp::et_off>;

constexpr double kAgreement = 1e-10;

// c_m for m >= 0 in the working precision; alpha is taken exactly as given.
template <typename Real>
std::vector<Real> arc_coefficients(double alpha, int n) {
  const Real a = alpha;
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<Real> c(static_cast<std::size_t>(n));
  c[0] = 1 - a / pi;
  for (int m = 1; m < n; ++m) {
    using std::sin;
    c[static_cast<std::size_t>(m)] = -sin(Real(m) * a) / (pi * m);
  }
  return c;
}

// Cholesky of the symmetric Toeplitz matrix; nullopt on a non-positive pivot.
template <typename Real>
std::optional<double> cholesky_log_det(double alpha, int n) {
  const auto c = arc_coefficients<Real>(alpha, n);
  const auto un = static_cast<std::size_t>(n);
  std::vector<Real> l(un * un, Real(0));
  Real log_det = 0;
  for (std::size_t j = 0; j < un; ++j) {
    Real pivot = c[0];
    for (std::size_t p = 0; p < j; ++p) pivot -= l[j * un + p] * l[j * un + p];
    if (!(pivot > 0)) return std::nullopt;
    using std::log;
    using std::sqrt;
    const Real d = sqrt(pivot);
    l[j * un + j] = d;
    log_det += log(pivot);
    for (std::size_t i = j + 1; i < un; ++i) {
      Real s = c[i - j];
      for (std::size_t p = 0; p < j; ++p) s -= l[i * un + p] * l[j * un + p];
      l[i * un + j] = s / d;
    }
  }
  return static_cast<double>(log_det);
}

struct Level {
  int digits;
  std::optional<double> (*run)(double, int);
};

constexpr Level kLevels[] = {
    {16, &cholesky_log_det<double>},
    {50, &cholesky_log_det<Wide<50>>},
    {100, &cholesky_log_det<Wide<100>>},
    {200, &cholesky_log_det<Wide<200>>},
    {400, &cholesky_log_det<Wide<400>>},
};

}  // namespace

double ArcSymbol::coefficient(int m) const {
  if (m == 0) return 1.0 - alpha / constants::pi;
  return -std::sin(m * alpha) / (constants::pi * m);
}

double toeplitz_asymptotic(double alpha, int n) {
  const double nn = static_cast<double>(n);
  return nn * nn * std::log(std::cos(0.5 * alpha)) - 0.25 * std::log(nn * std::sin(0.5 * alpha)) +
         std::log(2.0) / 12.0 + 3.0 * constants::zeta_prime_minus1;
}

ToeplitzResult toeplitz_log_det(const ArcSymbol& symbol, int n) {
  require(n >= 1 && n <= 512, ErrorCode::kPreconditionViolated, "matrix size must lie in [1, 512]");
  require(symbol.alpha > 0.0 && symbol.alpha < constants::pi, ErrorCode::kPreconditionViolated,
          "alpha must lie in (0, pi)");

  ToeplitzResult r;
  r.n = n;
  r.alpha = symbol.alpha;
  r.asymptotic = toeplitz_asymptotic(symbol.alpha, n);

  std::optional<double> previous;
  for (const auto& level : kLevels) {
    const auto current = level.run(symbol.alpha, n);
    // Two agreeing levels certify the lower one; report the more precise of the two.
    if (previous && current && std::abs(*previous - *current) <= kAgreement * std::max(1.0, std::abs(*current))) {
      r.log_det = *current;
      r.digits = level.digits;
      r.residual = r.log_det - r.asymptotic;
      return r;
    }
    previous = current;
  }
  throw Error(ErrorCode::kNotPositiveDefinite,
              "Toeplitz section is numerically singular even at 400 digits (n = " + std::to_string(n) + ")");
}

double continuum_asymptotic_log_det(double t) {
  const double tau = constants::pi * t;
  return -0.5 * tau * tau - 0.25 * std::log(tau) + std::log(2.0) / 12.0 + 3.0 * constants::zeta_prime_minus1;
}

SzegoLimitReport szego_limit_check(double alpha, int n, double t, int quad_order) {
  require(t >= 0.5 && t <= 3.0, ErrorCode::kPreconditionViolated, "t must lie in [0.5, 3]");
  require(std::abs(alpha * n - 2.0 * constants::pi * t) <= 1e-9 * 2.0 * constants::pi * t,
          ErrorCode::kPreconditionViolated, "alpha * n must equal 2 pi t");

  SzegoLimitReport r;
  r.alpha = alpha;
  r.n = n;
  r.t = t;
  r.toeplitz_log_det = toeplitz_log_det(ArcSymbol{alpha}, n).log_det;
  r.fredholm_log_det =
      fredholm_log_det(Parity::kEven, t, quad_order) + fredholm_log_det(Parity::kOdd, t, quad_order);
  r.continuum_asymptotic = continuum_asymptotic_log_det(t);
  r.gap_to_fredholm = r.toeplitz_log_det - r.fredholm_log_det;
  r.gap_to_asymptotic = r.toeplitz_log_det - r.continuum_asymptotic;
  return r;
}

}  // namespace symscat
