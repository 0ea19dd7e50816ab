#include <cmath>

#include <doctest.h>

#include "xxentropy/ed_oracle.hpp"
#include "xxentropy/entropy.hpp"

using namespace xxent;

namespace {

double toeplitz_vn(std::int64_t L, double h) {
  return von_neumann_entropy(correlation_spectrum(build_sign_matrix(L, fermi_momentum(h)))).value;
}

}  // namespace

TEST_CASE("two-site chain: one-site block is maximally mixed") {
  const OracleResult r = ed_ground_state_entropy(FiniteChainSpec(2, 1, 0.0), 1.0);
  CHECK_FALSE(r.degeneracy_flag);
  CHECK(r.entropy_partial_trace == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.entropy_correlation == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.ground_energy == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(FiniteChainSpec(1, 1, 0.0), DomainError);
  CHECK_THROWS_AS(FiniteChainSpec(4, 0, 0.0), DomainError);
  CHECK_THROWS_AS(FiniteChainSpec(4, 4, 0.0), DomainError);
  CHECK_THROWS_AS(ed_ground_state_entropy(FiniteChainSpec(13, 2, 0.0), 1.0), DomainError);
  CHECK_THROWS_AS(ed_ground_state_entropy(FiniteChainSpec(4, 2, 0.0), -1.0), DomainError);
}

TEST_CASE("partial trace equals the correlation route on the grid") {
  for (std::int64_t n : {2, 4, 6, 8, 10}) {
    for (std::int64_t L : {std::int64_t{1}, n / 2}) {
      for (double h : {0.3, 0.7, 1.3}) {
        for (double alpha : {1.0, 2.0}) {
          const OracleResult r = ed_ground_state_entropy(FiniteChainSpec(n, L, h), alpha);
          CAPTURE(n);
          CAPTURE(L);
          CAPTURE(h);
          CAPTURE(alpha);
          REQUIRE_FALSE(r.degeneracy_flag);
          CHECK(std::abs(r.entropy_partial_trace - r.entropy_correlation) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("complementary blocks of the pure ground state carry equal entropy") {
  // S(first L) = S(last N-L) by purity and S(last K) = S(first K) by the
  // reflection symmetry of the open chain, so comparing first-L with
  // first-(N-L) probes the partial-trace bookkeeping nontrivially.
  for (std::int64_t n : {4, 6, 10}) {
    for (std::int64_t L : {std::int64_t{1}, std::int64_t{2}}) {
      const double a =
          ed_ground_state_entropy(FiniteChainSpec(n, L, 0.7), 1.0).entropy_partial_trace;
      const double b =
          ed_ground_state_entropy(FiniteChainSpec(n, n - L, 0.7), 1.0).entropy_partial_trace;
      CHECK(std::abs(a - b) < 1e-10);
    }
  }
}

TEST_CASE("frozen regression fixture N = 10, L = 5, h = 0.5") {
  const OracleResult r = ed_ground_state_entropy(FiniteChainSpec(10, 5, 0.5), 1.0);
  REQUIRE_FALSE(r.degeneracy_flag);
  CHECK(r.entropy_partial_trace == doctest::Approx(0.608092708125331).epsilon(1e-9));
  CHECK(std::abs(r.entropy_partial_trace - r.entropy_correlation) < 1e-10);
  CHECK(r.ground_energy == doctest::Approx(-12.484089013571399).epsilon(1e-12));

  const OracleResult r2 = ed_ground_state_entropy(FiniteChainSpec(10, 5, 0.5), 2.0);
  CHECK(r2.entropy_partial_trace == doctest::Approx(0.359138668638103).epsilon(1e-9));
  CHECK(std::abs(r2.entropy_partial_trace - r2.entropy_correlation) < 1e-10);
}

TEST_CASE("ground energy matches the filled-mode sum") {
  // E_0 = sum_{eps_k < 0} (-4 cos(pi k/(N+1)) - 2h) + h N for the open chain.
  for (std::int64_t n : {4, 8, 10}) {
    for (double h : {0.3, 1.3}) {
      double fermionic = h * static_cast<double>(n);
      for (std::int64_t k = 1; k <= n; ++k) {
        const double e = -4.0 * std::cos(M_PI * static_cast<double>(k) / (n + 1.0)) - 2.0 * h;
        if (e < 0.0) fermionic += e;
      }
      const OracleResult r = ed_ground_state_entropy(FiniteChainSpec(n, 1, h), 1.0);
      CHECK(r.ground_energy == doctest::Approx(fermionic).epsilon(1e-11));
    }
  }
}

TEST_CASE("degenerate ground state is flagged, not compared") {
  // N = 3, h = sqrt(2): the k = 3 mode sits exactly at zero energy.
  const OracleResult r = ed_ground_state_entropy(FiniteChainSpec(3, 1, std::sqrt(2.0)), 1.0);
  CHECK(r.degeneracy_flag);
  CHECK(std::isnan(r.entropy_correlation));
  CHECK_THROWS_AS(finite_chain_correlation_entropy(FiniteChainSpec(3, 1, std::sqrt(2.0)), 1.0),
                  DomainError);
}

TEST_CASE("correlation route handles fields beyond the critical window") {
  // |h| > 2: every mode is filled (or empty) and the block is pure.
  CHECK(finite_chain_correlation_entropy(FiniteChainSpec(8, 3, 2.5), 1.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(finite_chain_correlation_entropy(FiniteChainSpec(8, 3, -2.5), 1.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("centered block of a long chain approaches the infinite lattice") {
  const FiniteChainSpec chain(2000, 10, 0.0);
  const double bulk = finite_chain_correlation_entropy(chain, 1.0, (2000 - 10) / 2);
  CHECK(std::abs(bulk - toeplitz_vn(10, 0.0)) < 1e-3);

  // The first-block (edge) value converges to the boundary law instead and
  // must stay well away from the bulk value.
  const double edge = finite_chain_correlation_entropy(chain, 1.0, 0);
  CHECK(std::abs(edge - toeplitz_vn(10, 0.0)) > 0.3);

  CHECK_THROWS_AS(finite_chain_correlation_entropy(chain, 1.0, 1995), DomainError);
}
