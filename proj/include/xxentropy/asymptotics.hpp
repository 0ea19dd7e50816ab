#pragma once

#include <complex>
#include <cstdint>

#include "xxentropy/model.hpp"

namespace xxent {

/// Tolerances and switch points for the Upsilon integrals.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double split_point = 60.0;    // upper end of the numeric t-integral
  double series_cutoff = 0.5;   // small-t series switchover

  bool valid() const {
    return abs_tol > 0 && rel_tol > 0 && split_point > 0 && series_cutoff > 0 &&
           series_cutoff < split_point;
  }
};

/// Process-wide default configuration (the CLI wires ENTROPY_QUAD_TOL to
/// abs_tol). Changing it invalidates nothing: the memo caches are keyed by
/// the configuration that produced each value.
QuadratureConfig default_quadrature();
void set_default_quadrature(const QuadratureConfig& config);

/// Digamma for Re z > 0: upward recurrence into |z| > 12, then the
/// asymptotic expansion.
std::complex<double> digamma(std::complex<double> z);

/// Re psi(1/2 + i w) = Re psi(1/2 - i w); the sum psi(1/2-iw)+psi(1/2+iw)
/// is twice this value.
double digamma_critical_line(double w);

/// The constant term of the large-block von Neumann asymptotic:
///   Upsilon_1 = -int_0^inf dt [ e^{-t}/(3t) + 1/(t sinh^2(t/2))
///                               - cosh(t/2)/(2 sinh^3(t/2)) ]
/// evaluated with a small-t series below series_cutoff (the two 4/t^3
/// singularities cancel but raw evaluation loses all digits near 0).
/// Memoized per configuration. Accurate to well below 1e-8.
double upsilon1();
double upsilon1(const QuadratureConfig& config);

/// Renyi generalization Upsilon_1^{alpha}: the x-integral of s_alpha
/// against the digamma pair, computed with the substitution x = tanh(pi w)
/// on w in [0, W]. alpha == 1 returns upsilon1(). Memoized per (alpha,
/// configuration).
double upsilon_alpha(double alpha);
double upsilon_alpha(double alpha, const QuadratureConfig& config);

enum class Regime { large_block, small_block };

struct AsymptoticPrediction {
  ModelParams params;
  double alpha = 1.0;
  Regime regime = Regime::large_block;
  double value = 0.0;
  double constant_used = 0.0;      // Upsilon_1 or Upsilon_1^{alpha}; NaN for small blocks
  bool out_of_window = false;      // scaling variable below ~10: asymptotic inaccurate
};

/// Large-block law. alpha = 1:  S = (1/3) ln(scriptL) + Upsilon_1, identically
/// (1/3) ln L + (1/6) ln(1-(h/2)^2) + (ln 2)/3 + Upsilon_1. alpha != 1:
/// S = ((1 + 1/alpha)/6) ln(scriptL) + Upsilon_1^{alpha}.
/// Domain error when the scaling variable is <= 0.
AsymptoticPrediction large_block_entropy(const ModelParams& params, double alpha);
AsymptoticPrediction large_block_entropy(const ModelParams& params, double alpha,
                                         const QuadratureConfig& config);

/// Small-block law, valid for scaling variable in (0, 1). With
/// u = scriptL/(2 pi):  alpha != 1 gives (1/(1-alpha)) ln(u^alpha + (1-u)^alpha);
/// alpha = 1 gives the alpha -> 1 limit of that family, -u ln u - (1-u) ln(1-u).
AsymptoticPrediction small_block_entropy(const ModelParams& params, double alpha);

namespace detail {

/// Integrand bracket of the Upsilon_1 t-integral, direct evaluation.
double upsilon1_bracket(double t);

/// Small-t Taylor series of the bracket (finite at t -> 0, limit -1/3).
double upsilon1_bracket_series(double t);

/// The x/w-domain quadrature route for Upsilon_1^{alpha}, defined for all
/// alpha > 0 including alpha = 1 (where s_1 = e(1, .)). This is the second
/// route of the dual-route check against the t-integral. Not memoized.
double upsilon_alpha_quadrature(double alpha, const QuadratureConfig& config);

}  // namespace detail

}  // namespace xxent
