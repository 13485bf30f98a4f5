#pragma once

// Shared conventions: natural units (hbar = 1, 2m = 1) so that k^2 = E and
// the interior equation reads psi'' = (V - E) psi.

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symscat {

using cplx = std::complex<double>;

enum class ErrorCode {
  kNonPositiveEnergy,
  kNonPositiveK,
  kPreconditionViolated,
  kInvalidInput,
  kAsymmetricPotential,
  kNonFiniteSample,
  kNonUniformGrid,
  kDeltaNotSamplable,
  kOverflow,
  kDegenerateTransfer,
  kSingularSystem,
  kComplexWavefunction,
  kAllMasked,
  kNodeCollision,
  kTTooLarge,
  kQuadOrderTooSmall,
  kEigenvalueAtOne,
  kSpectrumOutOfRange,
  kTauTooSmall,
  kNotPositiveDefinite,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws Error(code, message) unless `condition` holds.
inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

class Energy {
 public:
  /// Scattering energies only: throws NonPositiveEnergy for value <= 0 or NaN.
  explicit Energy(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

class WaveNumber {
 public:
  explicit WaveNumber(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

WaveNumber wavenumber_from_energy(Energy e);

namespace constants {

inline constexpr double pi = std::numbers::pi;

// zeta'(-1) = 1/12 - ln(A), A the Glaisher-Kinkelin constant.
inline constexpr double zeta_prime_minus1 = -0.16542114370045092921;

}  // namespace constants

}  // namespace symscat
