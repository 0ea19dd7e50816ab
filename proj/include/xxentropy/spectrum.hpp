#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "xxentropy/toeplitz.hpp"

namespace xxent {

/// Eigenvalues {nu_m} of G_L, sorted ascending and clamped into [-1, 1].
/// Overshoot beyond the clamp tolerance is an integrity error, not a clamp.
struct CorrelationSpectrum {
  std::vector<double> values;                         // ascending
  std::vector<std::pair<std::int64_t, double>> clamp_log;  // (index, overshoot)
  std::int64_t order = 0;
  double k_fermi = 0.0;

  /// Field strength this spectrum was built at (|h| = 2 cos k_F).
  double field() const;
};

/// Maximum |nu| - 1 excess tolerated before clamping; anything larger
/// indicates a construction bug and fails loudly.
inline constexpr double kClampTolerance = 1e-8;

/// Dense symmetric eigendecomposition of G_L (tridiagonalization +
/// implicit QR). Sorted ascending so downstream sums are deterministic.
/// Verifies the trace sum rule  sum(nu) = L (2 k_F/pi - 1)  to 1e-8 L.
CorrelationSpectrum correlation_spectrum(const SignMatrix& matrix);

}  // namespace xxent
