#include "xxentropy/toeplitz.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace xxent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::int64_t kMaxOrder = 20000;

void require_open_window(double k_fermi, const char* where) {
  if (!(k_fermi > 0.0 && k_fermi < kPi)) {
    throw DomainError(std::string(where) + ": k_F must lie in (0, pi), got " +
                      std::to_string(k_fermi));
  }
}

}  // namespace

SymbolSpec SymbolSpec::ground(double k_fermi) {
  require_open_window(k_fermi, "SymbolSpec::ground");
  return SymbolSpec{k_fermi, Kind::ground, {0.0, 0.0}};
}

SymbolSpec SymbolSpec::shifted(double k_fermi, std::complex<double> lambda) {
  require_open_window(k_fermi, "SymbolSpec::shifted");
  return SymbolSpec{k_fermi, Kind::shifted, lambda};
}

std::complex<double> SymbolSpec::value(double theta) const {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  const bool inner_arc = (t < k_fermi) || (t > 2.0 * kPi - k_fermi);
  if (kind == Kind::ground) return inner_arc ? 1.0 : -1.0;
  return inner_arc ? lambda - 1.0 : lambda + 1.0;
}

double fourier_coefficient(std::int64_t l, double k_fermi) {
  require_open_window(k_fermi, "fourier_coefficient");
  if (l == 0) return 2.0 * k_fermi / kPi - 1.0;
  // sin evaluated directly, no recurrence; library sine is ulp-accurate for
  // the argument sizes reachable here (|l| <= order cap).
  const double dl = static_cast<double>(l);
  return 2.0 * std::sin(k_fermi * dl) / (kPi * dl);
}

SignMatrix build_sign_matrix(std::int64_t order, double k_fermi) {
  if (order < 1) throw DomainError("build_sign_matrix: order must be >= 1");
  if (order > kMaxOrder) {
    throw DomainError("build_sign_matrix: order " + std::to_string(order) +
                      " exceeds supported maximum " + std::to_string(kMaxOrder));
  }
  require_open_window(k_fermi, "build_sign_matrix");

  SignMatrix m;
  m.order = order;
  m.k_fermi = k_fermi;
  m.first_row.resize(static_cast<std::size_t>(order));
  for (std::int64_t l = 0; l < order; ++l) {
    m.first_row[static_cast<std::size_t>(l)] = fourier_coefficient(l, k_fermi);
  }
  m.dense.resize(order, order);
  for (std::int64_t i = 0; i < order; ++i) {
    for (std::int64_t j = 0; j < order; ++j) {
      m.dense(i, j) = m.first_row[static_cast<std::size_t>(std::llabs(i - j))];
    }
  }
  return m;
}

}  // namespace xxent
