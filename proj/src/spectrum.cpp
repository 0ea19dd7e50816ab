#include "xxentropy/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace xxent {

double CorrelationSpectrum::field() const { return 2.0 * std::cos(k_fermi); }

CorrelationSpectrum correlation_spectrum(const SignMatrix& matrix) {
  if (matrix.order < 1 || matrix.dense.rows() != matrix.order ||
      matrix.dense.cols() != matrix.order) {
    throw DomainError("correlation_spectrum: malformed sign matrix");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix.dense,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ComputeError("correlation_spectrum: eigensolver failed to converge");
  }

  CorrelationSpectrum spec;
  spec.order = matrix.order;
  spec.k_fermi = matrix.k_fermi;
  spec.values.resize(static_cast<std::size_t>(matrix.order));

  const auto& ev = solver.eigenvalues();  // ascending
  for (std::int64_t i = 0; i < matrix.order; ++i) {
    double v = ev(i);
    const double overshoot = std::abs(v) - 1.0;
    if (overshoot > 0.0) {
      if (overshoot > kClampTolerance) {
        throw ComputeError("correlation_spectrum: eigenvalue " + std::to_string(v) +
                           " overshoots [-1,1] by " + std::to_string(overshoot) +
                           " (construction bug)");
      }
      spec.clamp_log.emplace_back(i, overshoot);
      v = v > 0.0 ? 1.0 : -1.0;
    }
    spec.values[static_cast<std::size_t>(i)] = v;
  }

  // Trace sum rule: sum nu_m = L g_0.
  double trace = 0.0;
  for (double v : spec.values) trace += v;
  const double expected =
      static_cast<double>(matrix.order) * (2.0 * matrix.k_fermi / std::numbers::pi - 1.0);
  if (std::abs(trace - expected) > 1e-8 * static_cast<double>(matrix.order)) {
    throw ComputeError("correlation_spectrum: trace sum rule violated (got " +
                       std::to_string(trace) + ", expected " + std::to_string(expected) + ")");
  }
  return spec;
}

}  // namespace xxent
