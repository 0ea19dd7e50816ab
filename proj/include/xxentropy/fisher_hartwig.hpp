#pragma once

#include <complex>
#include <cstdint>

#include "xxentropy/spectrum.hpp"

namespace xxent {

/// Jump exponent beta(lambda) = (1/2 pi i) ln((lambda+1)/(lambda-1)) with
/// the branch -pi <= arg((lambda+1)/(lambda-1)) < pi. Off the cut [-1, 1]
/// the real part satisfies |Re beta| < 1/2 (the proven-case window).
struct JumpExponent {
  std::complex<double> lambda;
  std::complex<double> beta;
};

/// Throws DomainError for lambda on the real interval [-1, 1].
JumpExponent beta_exponent(std::complex<double> lambda);

/// G(1+beta) G(1-beta) = e^{-(1+gamma_E) beta^2} prod_n (1-beta^2/n^2)^n e^{beta^2/n},
/// truncated at `terms` factors with a quadratic tail correction; relative
/// accuracy ~1e-10 for |beta| <= 1 at the default truncation. beta = +-1
/// returns exact 0 (zero of G); other nonzero integers are a domain error.
std::complex<double> barnes_g_pair(std::complex<double> beta, int terms = 2000);

/// log of the specialized Fisher-Hartwig asymptotic for det(lambda I - G_L):
///   D_L = (2-2cos 2k_F)^{-beta^2} [G(1+beta)G(1-beta)]^2
///         [(lambda+1)((lambda+1)/(lambda-1))^{-k_F/pi}]^L  L^{-2 beta^2}
/// with every power taken as exp(exponent * log) on the beta branch.
std::complex<double> fh_log_determinant(std::complex<double> lambda, std::int64_t order,
                                        double k_fermi);
std::complex<double> fh_determinant(std::complex<double> lambda, std::int64_t order,
                                    double k_fermi);

/// log of the exact determinant prod_m (lambda - nu_m), as a sum of complex
/// logs so large orders cannot overflow. Real part -inf if lambda collides
/// with an eigenvalue (within 1e-15).
std::complex<double> exact_log_determinant(std::complex<double> lambda,
                                           const CorrelationSpectrum& spectrum);

/// exp of the above; exact 0 at a pole collision.
std::complex<double> exact_determinant(std::complex<double> lambda,
                                       const CorrelationSpectrum& spectrum);

/// Asymptotic vs exact determinant at one (lambda, L). The ratio exact/FH
/// is formed in the log domain, so it stays finite even when the two
/// determinants individually overflow.
struct FHEvaluation {
  std::complex<double> lambda;
  std::int64_t order = 0;
  std::complex<double> asymptotic;
  std::complex<double> exact;
  std::complex<double> ratio;  // exact / asymptotic
};

FHEvaluation fh_evaluate(std::complex<double> lambda, const CorrelationSpectrum& spectrum);

}  // namespace xxent
