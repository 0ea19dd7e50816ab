#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "xxentropy/fisher_hartwig.hpp"
#include "xxentropy/model.hpp"

using namespace xxent;
using complexd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

CorrelationSpectrum spectrum_at(std::int64_t L, double h) {
  return correlation_spectrum(build_sign_matrix(L, fermi_momentum(h)));
}

// Independent oracle: the Barnes G defining product
//   G(1+z) = (2pi)^{z/2} e^{-(z+1)z/2 - gamma z^2/2} prod_n (1+z/n)^n e^{-z + z^2/(2n)}
// evaluated at ten times the production node count, with an integral tail
// correction for the slowly converging log-product.
complexd barnes_g_defining(complexd z, int terms) {
  complexd log_g = 0.5 * z * std::log(2.0 * kPi) - 0.5 * (z + 1.0) * z -
                   0.5 * kEulerGamma * z * z;
  for (int n = 1; n <= terms; ++n) {
    const double dn = n;
    log_g += dn * std::log(1.0 + z / dn) - z + z * z / (2.0 * dn);
  }
  // tail of sum_n [n ln(1+z/n) - z + z^2/(2n)] ~ sum_n [-z^3/(3n^2) + z^4/(4n^3)]
  const double N = terms;
  log_g += -z * z * z / 3.0 * (1.0 / N + 1.0 / (2.0 * N * N)) +
           z * z * z * z / 4.0 * (1.0 / (2.0 * N * N));
  return std::exp(log_g);
}

}  // namespace

TEST_CASE("beta exponent at reference points") {
  // lambda = 3: beta = (1/2 pi i) ln 2 = -i ln2 / (2 pi)
  const JumpExponent je = beta_exponent({3.0, 0.0});
  CHECK(je.beta.real() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(je.beta.imag() == doctest::Approx(-std::log(2.0) / (2.0 * kPi)).epsilon(1e-14));
  CHECK(je.beta.imag() == doctest::Approx(-0.11031780007632580).epsilon(1e-12));

  // Just above the cut at x = 0: beta -> -i W(0) - 1/2 = -1/2.
  const JumpExponent edge = beta_exponent({0.0, 1e-12});
  CHECK(edge.beta.real() == doctest::Approx(-0.5).epsilon(1e-9));

  // lambda -> infinity: beta -> 0.
  CHECK(std::abs(beta_exponent({1e9, 0.0}).beta) < 1e-8);

  for (double x : {-1.0, -0.3, 0.0, 0.99, 1.0}) {
    CHECK_THROWS_AS(beta_exponent({x, 0.0}), DomainError);
  }
  CHECK(std::abs(beta_exponent({2.0, 0.0}).beta.real()) < 0.5);  // proven window
}

TEST_CASE("Barnes G pair: closed cases and the defining-product oracle") {
  CHECK(barnes_g_pair({0.0, 0.0}) == complexd{1.0, 0.0});
  CHECK(barnes_g_pair({1.0, 0.0}) == complexd{0.0, 0.0});   // G(0) = 0
  CHECK(barnes_g_pair({-1.0, 0.0}) == complexd{0.0, 0.0});
  CHECK_THROWS_AS(barnes_g_pair({2.0, 0.0}), DomainError);

  const complexd beta{0.0, -std::log(2.0) / (2.0 * kPi)};
  const complexd pair = barnes_g_pair(beta);
  const complexd oracle = barnes_g_defining(beta, 20000) * barnes_g_defining(-beta, 20000);
  CHECK(std::abs(pair - oracle) < 1e-9);
  // Same value frozen from a 60-digit evaluation of G(1+b) G(1-b).
  CHECK(pair.real() == doctest::Approx(1.0192900352837573).epsilon(1e-10));
  CHECK(std::abs(pair.imag()) < 1e-12);

  // A generic complex exponent against the oracle.
  const complexd generic{0.21, 0.13};
  CHECK(std::abs(barnes_g_pair(generic) -
                 barnes_g_defining(generic, 20000) * barnes_g_defining(-generic, 20000)) < 1e-9);
}

TEST_CASE("exact determinant from the spectrum") {
  CHECK(exact_determinant({2.0, 0.0}, spectrum_at(1, 0.0)).real() ==
        doctest::Approx(2.0).epsilon(1e-14));
  // L = 2, h = 0: (2 - 2/pi)(2 + 2/pi) = 4 - 4/pi^2.
  CHECK(exact_determinant({2.0, 0.0}, spectrum_at(2, 0.0)).real() ==
        doctest::Approx(4.0 - 4.0 / (kPi * kPi)).epsilon(1e-12));

  // Pole collision: determinant exactly zero.
  const auto spec1 = spectrum_at(1, 0.0);  // nu = {0}
  CHECK(exact_determinant({0.0, 0.0}, spec1) == complexd{0.0, 0.0});
}

TEST_CASE("expanded determinant reproduces the characteristic polynomial of G_3") {
  const auto matrix = build_sign_matrix(3, fermi_momentum(0.7));
  const auto spec = correlation_spectrum(matrix);
  const double nu1 = spec.values[0], nu2 = spec.values[1], nu3 = spec.values[2];
  // prod (lambda - nu) = lambda^3 - e1 lambda^2 + e2 lambda - e3
  const double e1 = nu1 + nu2 + nu3;
  const double e2 = nu1 * nu2 + nu1 * nu3 + nu2 * nu3;
  const double e3 = nu1 * nu2 * nu3;

  // Brute-force cofactor expansion of G_3.
  const auto& g = matrix.dense;
  const double trace = g(0, 0) + g(1, 1) + g(2, 2);
  const double minors = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) + g(0, 0) * g(2, 2) -
                        g(0, 2) * g(2, 0) + g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1);
  const double det = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) -
                     g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
                     g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
  CHECK(std::abs(e1 - trace) < 1e-12);
  CHECK(std::abs(e2 - minors) < 1e-12);
  CHECK(std::abs(e3 - det) < 1e-12);
}

TEST_CASE("exp-log product equals the direct product away from overflow") {
  for (std::int64_t L : {3, 17, 50}) {
    const auto spec = spectrum_at(L, 0.9);
    for (const complexd lambda : {complexd{2.0, 0.0}, complexd{1.5, 0.5}, complexd{-3.0, 0.0}}) {
      complexd direct{1.0, 0.0};
      for (double nu : spec.values) direct *= lambda - nu;
      const complexd via_log = exact_determinant(lambda, spec);
      CHECK(std::abs(via_log - direct) <= 1e-12 * std::abs(direct));
    }
  }
}

TEST_CASE("FH asymptotic has the dominant lambda^L balance") {
  const double k = fermi_momentum(0.0);
  const complexd lambda{1e6, 0.0};
  const complexd fh = fh_determinant(lambda, 3, k);
  const complexd leading = std::pow(lambda, 3);
  CHECK(std::abs(fh / leading - 1.0) < 1e-5);
}

TEST_CASE("FH parity at h = 0 for even orders") {
  const auto spec = spectrum_at(40, 0.0);
  for (const double x : {2.5, 1.7}) {
    const FHEvaluation plus = fh_evaluate({x, 0.0}, spec);
    const FHEvaluation minus = fh_evaluate({-x, 0.0}, spec);
    CHECK(std::abs(std::abs(plus.asymptotic) - std::abs(minus.asymptotic)) <=
          1e-10 * std::abs(plus.asymptotic));
    CHECK(std::abs(std::abs(plus.exact) - std::abs(minus.exact)) <=
          1e-10 * std::abs(plus.exact));
  }
}

TEST_CASE("ratio exact/FH converges toward 1 (even orders, 10% slack)") {
  for (const complexd lambda : {complexd{2.0, 0.0}, complexd{1.5, 0.5}, complexd{-3.0, 0.0}}) {
    for (double h : {0.0, 1.0}) {
      std::vector<double> deviation;
      for (std::int64_t L : {26, 52, 104}) {
        const auto spec = spectrum_at(L, h);
        deviation.push_back(std::abs(fh_evaluate(lambda, spec).ratio - 1.0));
      }
      CAPTURE(lambda.real());
      CAPTURE(h);
      for (std::size_t i = 0; i + 1 < deviation.size(); ++i) {
        CHECK(deviation[i + 1] <= 1.1 * deviation[i]);
      }
      CHECK(deviation.back() < 1e-3);
    }
  }
}

TEST_CASE("log-domain ratio survives determinant overflow") {
  // At L = 1400, lambda = 2 the determinant is ~ 3^700, past the double
  // range; the ratio must still come out finite and close to 1.
  const auto spec = spectrum_at(1400, 0.0);
  const FHEvaluation ev = fh_evaluate({2.0, 0.0}, spec);
  CHECK(std::isinf(std::abs(ev.exact)));
  CHECK(std::isfinite(ev.ratio.real()));
  CHECK(std::abs(ev.ratio - 1.0) < 1e-3);
}
