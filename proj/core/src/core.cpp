#include "symscat/core.hpp"

#include <cmath>

namespace symscat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPositiveEnergy: return "NonPositiveEnergy";
    case ErrorCode::kNonPositiveK: return "NonPositiveK";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kAsymmetricPotential: return "AsymmetricPotential";
    case ErrorCode::kNonFiniteSample: return "NonFiniteSample";
    case ErrorCode::kNonUniformGrid: return "NonUniformGrid";
    case ErrorCode::kDeltaNotSamplable: return "DeltaNotSamplable";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kDegenerateTransfer: return "DegenerateTransfer";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kComplexWavefunction: return "ComplexWavefunction";
    case ErrorCode::kAllMasked: return "AllMasked";
    case ErrorCode::kNodeCollision: return "NodeCollision";
    case ErrorCode::kTTooLarge: return "TTooLarge";
    case ErrorCode::kQuadOrderTooSmall: return "QuadOrderTooSmall";
    case ErrorCode::kEigenvalueAtOne: return "EigenvalueAtOne";
    case ErrorCode::kSpectrumOutOfRange: return "SpectrumOutOfRange";
    case ErrorCode::kTauTooSmall: return "TauTooSmall";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
  }
  return "Unknown";
}

Energy::Energy(double value) : value_(value) {
  require(value > 0.0, ErrorCode::kNonPositiveEnergy,
          "scattering requires E > 0, got " + std::to_string(value));
}

WaveNumber::WaveNumber(double value) : value_(value) {
  require(value > 0.0, ErrorCode::kNonPositiveK, "wavenumber must be positive");
}

WaveNumber wavenumber_from_energy(Energy e) { return WaveNumber(std::sqrt(e.value())); }

}  // namespace symscat
