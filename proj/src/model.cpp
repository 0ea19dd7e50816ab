#include "xxentropy/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xxent {

double fermi_momentum(double h) {
  const double a = std::abs(h);
  if (!(a <= kCriticalField)) {
    throw DomainError("fermi_momentum: |h| = " + std::to_string(a) +
                      " outside critical window (|h| <= 2)");
  }
  return std::acos(a / 2.0);
}

double scaled_length(std::int64_t length, double h) {
  if (length < 1) throw DomainError("scaled_length: block length must be >= 1");
  const double a = std::abs(h);
  if (!(a <= kCriticalField)) {
    throw DomainError("scaled_length: |h| outside critical window (|h| <= 2)");
  }
  // 1 - (h/2)^2 in product form; the squared form cancels near |h| = 2.
  return 2.0 * static_cast<double>(length) * std::sqrt((1.0 - a / 2.0) * (1.0 + a / 2.0));
}

ModelParams::ModelParams(std::int64_t block_length, double field)
    : h(field),
      length(block_length),
      k_fermi(fermi_momentum(field)),
      script_length(scaled_length(block_length, field)) {}

double ModelParams::reduced_fermi_momentum() const {
  return k_fermi < 0.5 * std::numbers::pi ? k_fermi : std::numbers::pi - k_fermi;
}

bool ModelParams::at_critical_boundary() const { return std::abs(h) == kCriticalField; }

}  // namespace xxent
