#pragma once

#include <cstdint>
#include <vector>

#include "xxentropy/model.hpp"
#include "xxentropy/spectrum.hpp"

namespace xxent {

enum class EntropyKind { von_neumann, renyi, tsallis };

struct EntropyReport {
  ModelParams params;
  double alpha = 1.0;
  double value = 0.0;  // nats
  EntropyKind kind = EntropyKind::von_neumann;
  bool critical_boundary = false;  // |h| == 2 shortcut, S = 0
};

/// e(x, nu) = -((x+nu)/2) ln((x+nu)/2) - ((x-nu)/2) ln((x-nu)/2)
/// with the convention 0 ln 0 = 0 (explicit branch once |nu| reaches
/// x (1 - 1e-15), so clamped eigenvalues sitting exactly at +-1 are safe).
/// Requires x >= |nu|.
double binary_entropy_term(double x, double nu);

/// Per-mode Renyi term  s_alpha(nu) = ln(p^alpha + q^alpha) / (1 - alpha)
/// with p, q = (1 +- nu)/2, evaluated in log-sum-exp form so the smaller
/// power cannot underflow for large alpha.
double renyi_mode_term(double nu, double alpha);

/// S = sum_m e(1, nu_m).
EntropyReport von_neumann_entropy(const CorrelationSpectrum& spectrum);

/// S_alpha = sum_m s_alpha(nu_m). alpha == 1 delegates to the von Neumann
/// path (the formulas are continuous there); alpha <= 0 is a domain error.
EntropyReport renyi_entropy(const CorrelationSpectrum& spectrum, double alpha);

/// S_T = (exp((1 - alpha) S_alpha) - 1) / (1 - alpha)  ==  (Tr rho^alpha - 1)/(1 - alpha).
EntropyReport tsallis_entropy(const CorrelationSpectrum& spectrum, double alpha);

/// All 2^L eigenvalues of the reduced density matrix:
/// prod_i (1 + (-1)^{x_i} nu_i)/2 over x in {0,1}^L. Capped at L <= 20.
struct DensitySpectrum {
  std::vector<double> eigenvalues;
};

DensitySpectrum density_matrix_spectrum(const CorrelationSpectrum& spectrum);

/// Full pipeline: parameters -> G_L -> spectrum -> entropy. Handles the
/// |h| = 2 boundary by reporting S = 0 with the critical_boundary flag.
EntropyReport block_entropy(const ModelParams& params, double alpha, EntropyKind kind);

}  // namespace xxent
