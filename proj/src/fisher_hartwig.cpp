#include "xxentropy/fisher_hartwig.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace xxent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

// Principal log with arg mapped from (-pi, pi] to [-pi, pi), the branch
// that keeps the determinant formula single-valued.
std::complex<double> branch_log(std::complex<double> z) {
  std::complex<double> w = std::log(z);
  if (w.imag() == kPi) w = {w.real(), -kPi};
  return w;
}

bool on_cut(std::complex<double> lambda) {
  return lambda.imag() == 0.0 && lambda.real() >= -1.0 && lambda.real() <= 1.0;
}

}  // namespace

JumpExponent beta_exponent(std::complex<double> lambda) {
  if (on_cut(lambda)) {
    throw DomainError("beta_exponent: lambda lies on the branch cut [-1, 1]");
  }
  const std::complex<double> ratio = (lambda + 1.0) / (lambda - 1.0);
  const std::complex<double> beta = branch_log(ratio) / std::complex<double>(0.0, 2.0 * kPi);
  if (!(std::abs(beta.real()) < 0.5)) {
    // Only reachable through rounding pathologies; the proven-case window
    // |Re beta| < 1/2 holds for every lambda off the cut.
    throw ComputeError("beta_exponent: |Re beta| >= 1/2, outside the proven window");
  }
  return JumpExponent{lambda, beta};
}

std::complex<double> barnes_g_pair(std::complex<double> beta, int terms) {
  if (terms < 1) throw DomainError("barnes_g_pair: terms must be >= 1");
  if (beta.imag() == 0.0 && beta.real() == std::nearbyint(beta.real()) && beta.real() != 0.0) {
    const double n = std::abs(beta.real());
    if (n == 1.0) return 0.0;  // G(0) = 0, the n = 1 factor vanishes
    throw DomainError("barnes_g_pair: beta is a nonzero integer (zero/pole of the pair)");
  }
  const std::complex<double> u = beta * beta;
  // Tail of log-sum behaves like -u^2/(2 n^3); make sure the correction
  // below actually captures it at this truncation.
  const double un = std::abs(u);
  if (un * un / (4.0 * static_cast<double>(terms) * terms) > 1e-8) {
    throw ComputeError("barnes_g_pair: truncation too short for |beta| = " +
                       std::to_string(std::abs(beta)));
  }
  std::complex<double> log_pair = -(1.0 + kEulerGamma) * u;
  for (int n = 1; n <= terms; ++n) {
    const double dn = static_cast<double>(n);
    log_pair += dn * std::log(1.0 - u / (dn * dn)) + u / dn;
  }
  // Euler-Maclaurin tails of sum_{n>N} [-u^2/(2n^3) - u^3/(3n^5)].
  const double N = static_cast<double>(terms);
  const double s3 = 1.0 / (2.0 * N * N) - 1.0 / (2.0 * N * N * N) + 1.0 / (4.0 * N * N * N * N);
  const double s5 = 1.0 / (4.0 * N * N * N * N);
  log_pair += -u * u / 2.0 * s3 - u * u * u / 3.0 * s5;
  return std::exp(log_pair);
}

std::complex<double> fh_log_determinant(std::complex<double> lambda, std::int64_t order,
                                        double k_fermi) {
  if (order < 1) throw DomainError("fh_log_determinant: order must be >= 1");
  if (!(k_fermi > 0.0 && k_fermi < kPi)) {
    throw DomainError("fh_log_determinant: k_F must lie in (0, pi)");
  }
  const JumpExponent je = beta_exponent(lambda);
  const std::complex<double> b2 = je.beta * je.beta;
  const std::complex<double> pair = barnes_g_pair(je.beta);
  const double jump_gap = 2.0 - 2.0 * std::cos(2.0 * k_fermi);  // > 0 inside (0, pi)

  // Winding factor per site: (lambda+1) ((lambda+1)/(lambda-1))^{-k_F/pi},
  // on the same branch as beta.
  const std::complex<double> per_site =
      std::log(lambda + 1.0) - (k_fermi / kPi) * branch_log((lambda + 1.0) / (lambda - 1.0));

  return -b2 * std::log(jump_gap) + 2.0 * std::log(pair) +
         static_cast<double>(order) * per_site - 2.0 * b2 * std::log(static_cast<double>(order));
}

std::complex<double> fh_determinant(std::complex<double> lambda, std::int64_t order,
                                    double k_fermi) {
  return std::exp(fh_log_determinant(lambda, order, k_fermi));
}

std::complex<double> exact_log_determinant(std::complex<double> lambda,
                                           const CorrelationSpectrum& spectrum) {
  std::complex<double> acc = 0.0;
  for (double nu : spectrum.values) {
    const std::complex<double> factor = lambda - nu;
    if (std::abs(factor) < 1e-15) {
      return {-std::numeric_limits<double>::infinity(), 0.0};  // pole: determinant 0
    }
    acc += std::log(factor);
  }
  return acc;
}

std::complex<double> exact_determinant(std::complex<double> lambda,
                                       const CorrelationSpectrum& spectrum) {
  const std::complex<double> ln = exact_log_determinant(lambda, spectrum);
  if (std::isinf(ln.real()) && ln.real() < 0.0) return 0.0;
  return std::exp(ln);
}

FHEvaluation fh_evaluate(std::complex<double> lambda, const CorrelationSpectrum& spectrum) {
  FHEvaluation ev;
  ev.lambda = lambda;
  ev.order = spectrum.order;
  const std::complex<double> ln_fh = fh_log_determinant(lambda, spectrum.order, spectrum.k_fermi);
  const std::complex<double> ln_exact = exact_log_determinant(lambda, spectrum);
  ev.asymptotic = std::exp(ln_fh);
  ev.exact = std::exp(ln_exact);
  ev.ratio = std::exp(ln_exact - ln_fh);
  return ev;
}

}  // namespace xxent
