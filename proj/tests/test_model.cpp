#include <cmath>
#include <numbers>

#include <doctest.h>

#include "xxentropy/model.hpp"

using namespace xxent;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("fermi momentum at reference fields") {
  CHECK(fermi_momentum(0.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(fermi_momentum(2.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(fermi_momentum(1.0) == doctest::Approx(kPi / 3).epsilon(1e-15));
  CHECK(fermi_momentum(-1.0) == fermi_momentum(1.0));
}

TEST_CASE("fermi momentum rejects fields outside the critical window") {
  CHECK_THROWS_AS(fermi_momentum(2.0000001), DomainError);
  CHECK_THROWS_AS(fermi_momentum(-3.0), DomainError);
  CHECK_THROWS_AS(fermi_momentum(std::nan("")), DomainError);
}

TEST_CASE("scaled length at reference points") {
  CHECK(scaled_length(1, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(scaled_length(10, 2.0) == doctest::Approx(0.0).epsilon(1e-15));
  // 10 sqrt(3), evaluated in extended precision
  CHECK(scaled_length(10, 1.0) == doctest::Approx(17.320508075688772935).epsilon(1e-15));
  CHECK_THROWS_AS(scaled_length(0, 0.0), DomainError);
  CHECK_THROWS_AS(scaled_length(10, 2.5), DomainError);
}

TEST_CASE("scaled length equals 2 L sin(k_F) and is even in h") {
  for (std::int64_t L : {1, 3, 17, 240}) {
    for (double h : {0.0, 0.1, 0.77, 1.0, 1.5, 1.9}) {
      const double via_sin = 2.0 * static_cast<double>(L) * std::sin(fermi_momentum(h));
      const double direct = scaled_length(L, h);
      CHECK(std::abs(direct - via_sin) <= 1e-14 * direct);
      CHECK(scaled_length(L, h) == scaled_length(L, -h));  // exact: |h| only
    }
    // Near the boundary arccos itself is ill-conditioned; the identity
    // still holds, only at the conditioning-limited accuracy.
    const double via_sin = 2.0 * static_cast<double>(L) * std::sin(fermi_momentum(1.9999));
    CHECK(std::abs(scaled_length(L, 1.9999) - via_sin) <= 1e-11 * via_sin);
  }
}

TEST_CASE("fermi momentum decreases monotonically in |h|") {
  double prev = fermi_momentum(0.0);
  for (double h = 0.05; h <= 2.0; h += 0.05) {
    const double k = fermi_momentum(h);
    CHECK(k < prev);
    prev = k;
  }
}

TEST_CASE("model params derive scales and boundary flag") {
  const ModelParams p(100, -1.2);
  CHECK(p.h == -1.2);
  CHECK(p.length == 100);
  CHECK(p.k_fermi == doctest::Approx(std::acos(0.6)).epsilon(1e-15));
  CHECK(p.script_length == doctest::Approx(160.0).epsilon(1e-15));
  CHECK_FALSE(p.at_critical_boundary());
  CHECK(ModelParams(5, 2.0).at_critical_boundary());
  CHECK(ModelParams(5, -2.0).at_critical_boundary());

  // k~_F = k_F throughout the critical window (k_F <= pi/2 there).
  for (double h : {0.0, 0.4, 1.7}) {
    const ModelParams q(3, h);
    CHECK(q.reduced_fermi_momentum() == doctest::Approx(q.k_fermi).epsilon(1e-15));
  }
}
