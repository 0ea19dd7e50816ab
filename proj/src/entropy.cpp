#include "xxentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xxentropy/toeplitz.hpp"

namespace xxent {

namespace {

// Weights within one ulp of the pure case are treated as exactly pure so
// that clamped eigenvalues sitting at +-1 obey the 0 ln 0 = 0 convention.
constexpr double kPureThreshold = 1e-15;

EntropyReport make_report(const CorrelationSpectrum& spectrum, double alpha, double value,
                          EntropyKind kind) {
  EntropyReport r{ModelParams(spectrum.order, spectrum.field()), alpha, value, kind, false};
  if (r.value < 0.0 && r.value > -1e-12) r.value = 0.0;  // rounding at the pure end
  return r;
}

}  // namespace

double binary_entropy_term(double x, double nu) {
  if (!(x >= std::abs(nu))) {
    throw DomainError("binary_entropy_term: requires x >= |nu|, got x = " + std::to_string(x) +
                      ", nu = " + std::to_string(nu));
  }
  if (x == 0.0) return 0.0;
  if (std::abs(nu) >= x * (1.0 - kPureThreshold)) {
    const double u = 0.5 * (x + std::abs(nu));
    return u > 0.0 ? -u * std::log(u) : 0.0;
  }
  const double u = 0.5 * (x + nu);
  const double v = 0.5 * (x - nu);
  return -u * std::log(u) - v * std::log(v);
}

double renyi_mode_term(double nu, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("renyi_mode_term: alpha must be > 0");
  if (alpha == 1.0) return binary_entropy_term(1.0, nu);
  double p = 0.5 * (1.0 + nu);
  double q = 0.5 * (1.0 - nu);
  p = std::clamp(p, 0.0, 1.0);
  q = std::clamp(q, 0.0, 1.0);
  double lse;
  if (p <= 0.0) {
    lse = alpha * std::log(q);
  } else if (q <= 0.0) {
    lse = alpha * std::log(p);
  } else {
    const double a = alpha * std::log(p);
    const double b = alpha * std::log(q);
    const double hi = std::max(a, b);
    lse = hi + std::log1p(std::exp(std::min(a, b) - hi));
  }
  return lse / (1.0 - alpha);
}

EntropyReport von_neumann_entropy(const CorrelationSpectrum& spectrum) {
  double s = 0.0;
  for (double nu : spectrum.values) s += binary_entropy_term(1.0, nu);
  return make_report(spectrum, 1.0, s, EntropyKind::von_neumann);
}

EntropyReport renyi_entropy(const CorrelationSpectrum& spectrum, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("renyi_entropy: alpha must be > 0");
  if (alpha == 1.0) {
    EntropyReport r = von_neumann_entropy(spectrum);
    r.kind = EntropyKind::renyi;
    return r;
  }
  double s = 0.0;
  for (double nu : spectrum.values) s += renyi_mode_term(nu, alpha);
  return make_report(spectrum, alpha, s, EntropyKind::renyi);
}

EntropyReport tsallis_entropy(const CorrelationSpectrum& spectrum, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("tsallis_entropy: alpha must be > 0");
  if (alpha == 1.0) {
    EntropyReport r = von_neumann_entropy(spectrum);
    r.kind = EntropyKind::tsallis;
    return r;
  }
  const double s_renyi = renyi_entropy(spectrum, alpha).value;
  const double value = std::expm1((1.0 - alpha) * s_renyi) / (1.0 - alpha);
  EntropyReport r = make_report(spectrum, alpha, value, EntropyKind::tsallis);
  return r;
}

DensitySpectrum density_matrix_spectrum(const CorrelationSpectrum& spectrum) {
  if (spectrum.order > 20) {
    throw DomainError("density_matrix_spectrum: 2^L eigenvalues capped at L <= 20, got L = " +
                      std::to_string(spectrum.order));
  }
  DensitySpectrum d;
  d.eigenvalues.assign(1, 1.0);
  d.eigenvalues.reserve(std::size_t{1} << spectrum.values.size());
  for (double nu : spectrum.values) {
    const double p = std::clamp(0.5 * (1.0 + nu), 0.0, 1.0);
    const double q = 1.0 - p;
    const std::size_t n = d.eigenvalues.size();
    d.eigenvalues.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const double w = d.eigenvalues[i];
      d.eigenvalues[i] = w * p;
      d.eigenvalues[i + n] = w * q;
    }
  }
  return d;
}

EntropyReport block_entropy(const ModelParams& params, double alpha, EntropyKind kind) {
  if (!(alpha > 0.0)) throw DomainError("block_entropy: alpha must be > 0");
  if (params.at_critical_boundary()) {
    // Product ground state at the boundary of criticality: zero entropy.
    return EntropyReport{params, alpha, 0.0, kind, true};
  }
  const CorrelationSpectrum spec =
      correlation_spectrum(build_sign_matrix(params.length, params.k_fermi));
  switch (kind) {
    case EntropyKind::von_neumann:
      return von_neumann_entropy(spec);
    case EntropyKind::renyi:
      return renyi_entropy(spec, alpha);
    case EntropyKind::tsallis:
      return tsallis_entropy(spec, alpha);
  }
  throw DomainError("block_entropy: unknown entropy kind");
}

}  // namespace xxent
