#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "xxentropy/errors.hpp"

namespace xxent {

/// Piecewise-constant jump symbol on the unit circle. The ground symbol
/// takes values +1 on (-k_F, k_F) and -1 on (k_F, 2pi - k_F); the shifted
/// symbol takes lambda -/+ 1 on the same arcs and generates lambda*I - G_L.
/// The shifted variant exists for bookkeeping in the Fisher-Hartwig module;
/// it never gets its own matrix.
struct SymbolSpec {
  enum class Kind { ground, shifted };

  double k_fermi = 0.0;
  Kind kind = Kind::ground;
  std::complex<double> lambda{0.0, 0.0};

  static SymbolSpec ground(double k_fermi);
  static SymbolSpec shifted(double k_fermi, std::complex<double> lambda);

  /// Symbol value at angle theta (any real, reduced mod 2pi).
  std::complex<double> value(double theta) const;
};

/// Fourier coefficient of the ground symbol:
///   g_0 = 2 k_F / pi - 1,   g_l = 2 sin(k_F l) / (pi l)  for l != 0.
/// Even in l. Requires k_F in (0, pi).
double fourier_coefficient(std::int64_t l, double k_fermi);

/// The L x L real symmetric Toeplitz matrix G_L with (G_L)_{ij} = g_{i-j}.
struct SignMatrix {
  std::int64_t order = 0;
  double k_fermi = 0.0;
  std::vector<double> first_row;  // g_0 ... g_{L-1} (g_{-l} = g_l)
  Eigen::MatrixXd dense;
};

/// Builds G_L from the closed-form coefficients. O(L) coefficients plus
/// O(L^2) fill. Guards against absurd orders (L <= 20000).
SignMatrix build_sign_matrix(std::int64_t order, double k_fermi);

}  // namespace xxent
