#pragma once

#include <cstdint>

#include "xxentropy/errors.hpp"

namespace xxent {

/// Critical field of the XX chain; |h| >= 2 has a product ground state.
inline constexpr double kCriticalField = 2.0;

/// Fermi momentum k_F = arccos(|h|/2), in [0, pi/2].
/// Throws DomainError for |h| > 2 (outside the critical window).
double fermi_momentum(double h);

/// Universal scaling variable  2 L sqrt(1 - (h/2)^2)  ==  2 L sin(k_F).
double scaled_length(std::int64_t length, double h);

/// Physical parameters of one block computation. Only |h| enters the
/// formulas; the sign of h is kept for reporting.
struct ModelParams {
  double h = 0.0;
  std::int64_t length = 1;
  double k_fermi = 0.0;
  double script_length = 0.0;  // the scaling variable

  ModelParams(std::int64_t block_length, double field);

  /// k_F for k_F < pi/2, otherwise pi - k_F; equal to k_F everywhere on
  /// |h| <= 2.
  double reduced_fermi_momentum() const;

  /// |h| == 2 exactly: k_F = 0, scaling variable 0. Entropy operations
  /// report S = 0 with this flag instead of running the degenerate
  /// Toeplitz pipeline.
  bool at_critical_boundary() const;
};

}  // namespace xxent
