#include "xxentropy/ed_oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "xxentropy/entropy.hpp"

namespace xxent {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegeneracyGap = 1e-10;

// Entropy of a probability list (von Neumann for alpha = 1, Renyi otherwise).
double probability_entropy(const std::vector<double>& probs, double alpha) {
  if (alpha == 1.0) {
    double s = 0.0;
    for (double p : probs) {
      if (p > 1e-300) s -= p * std::log(p);
    }
    return s;
  }
  double z = 0.0;
  for (double p : probs) {
    if (p > 0.0) z += std::pow(p, alpha);
  }
  return std::log(z) / (1.0 - alpha);
}

struct SectorGroundState {
  double energy = std::numeric_limits<double>::infinity();
  double second_energy = std::numeric_limits<double>::infinity();
  Eigen::VectorXd amplitudes;        // in the sector basis
  std::vector<std::uint32_t> basis;  // full-space indices, ascending
};

// Dense diagonalization of one magnetization sector of the open chain
//   H = -sum_{n<N} (sx sx + sy sy) - h sum_n sz.
// Site 1 is the most significant bit of the basis index; a set bit is a
// flipped (down) spin. The XX coupling hops flipped spins with element -2.
SectorGroundState diagonalize_sector(std::int64_t n_sites, int n_down, double h) {
  const std::uint32_t dim_full = std::uint32_t{1} << n_sites;
  SectorGroundState out;
  for (std::uint32_t idx = 0; idx < dim_full; ++idx) {
    if (std::popcount(idx) == n_down) out.basis.push_back(idx);
  }
  const std::size_t dim = out.basis.size();
  std::vector<std::int64_t> position(dim_full, -1);
  for (std::size_t p = 0; p < dim; ++p) position[out.basis[p]] = static_cast<std::int64_t>(p);

  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                            static_cast<Eigen::Index>(dim));
  for (std::size_t p = 0; p < dim; ++p) {
    const std::uint32_t idx = out.basis[p];
    const double up_minus_down =
        static_cast<double>(n_sites) - 2.0 * static_cast<double>(std::popcount(idx));
    H(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p)) = -h * up_minus_down;
    for (std::int64_t site = 0; site + 1 < n_sites; ++site) {
      const std::uint32_t b1 = (idx >> (n_sites - 1 - site)) & 1u;
      const std::uint32_t b2 = (idx >> (n_sites - 2 - site)) & 1u;
      if (b1 != b2) {
        const std::uint32_t flipped =
            idx ^ (std::uint32_t{1} << (n_sites - 1 - site)) ^
            (std::uint32_t{1} << (n_sites - 2 - site));
        H(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(position[flipped])) = -2.0;
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H);
  if (solver.info() != Eigen::Success) {
    throw ComputeError("ed_ground_state_entropy: sector eigensolver failed");
  }
  out.energy = solver.eigenvalues()(0);
  if (dim > 1) out.second_energy = solver.eigenvalues()(1);
  out.amplitudes = solver.eigenvectors().col(0);
  return out;
}

}  // namespace

FiniteChainSpec::FiniteChainSpec(std::int64_t sites, std::int64_t block, double field)
    : n_sites(sites), block_len(block), h(field) {
  if (sites < 2) throw DomainError("FiniteChainSpec: need at least 2 sites");
  if (block < 1 || block >= sites) {
    throw DomainError("FiniteChainSpec: block length must lie in [1, n_sites - 1]");
  }
}

OracleResult ed_ground_state_entropy(const FiniteChainSpec& spec, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("ed_ground_state_entropy: alpha must be > 0");
  if (spec.n_sites > 12) {
    throw DomainError("ed_ground_state_entropy: full Hilbert space capped at 12 sites");
  }
  const std::int64_t n = spec.n_sites;
  const std::int64_t L = spec.block_len;

  double best = std::numeric_limits<double>::infinity();
  double second = std::numeric_limits<double>::infinity();
  SectorGroundState ground;
  for (int n_down = 0; n_down <= n; ++n_down) {
    SectorGroundState s = diagonalize_sector(n, n_down, spec.h);
    for (double e : {s.energy, s.second_energy}) {
      if (e < best) {
        second = best;
        best = e;
      } else if (e < second) {
        second = e;
      }
    }
    if (s.energy == best) ground = std::move(s);
  }

  OracleResult result;
  result.ground_energy = best;
  result.degeneracy_flag = (second - best) < kDegeneracyGap;

  // Partial trace over sites block_len+1 .. N: reshape the state into a
  // 2^L x 2^(N-L) matrix M (site 1 slowest); rho_A = M M^T, and the Gram
  // matrix on the smaller side carries the same nonzero spectrum.
  const std::int64_t rows = std::int64_t{1} << L;
  const std::int64_t cols = std::int64_t{1} << (n - L);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(rows, cols);
  for (std::size_t p = 0; p < ground.basis.size(); ++p) {
    const std::uint32_t idx = ground.basis[p];
    M(static_cast<Eigen::Index>(idx >> (n - L)),
      static_cast<Eigen::Index>(idx & ((std::uint32_t{1} << (n - L)) - 1u))) =
        ground.amplitudes(static_cast<Eigen::Index>(p));
  }
  const Eigen::MatrixXd gram =
      rows <= cols ? Eigen::MatrixXd(M * M.transpose()) : Eigen::MatrixXd(M.transpose() * M);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> rho(gram, Eigen::EigenvaluesOnly);
  if (rho.info() != Eigen::Success) {
    throw ComputeError("ed_ground_state_entropy: density-matrix eigensolver failed");
  }
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(rho.eigenvalues().size()));
  for (Eigen::Index i = 0; i < rho.eigenvalues().size(); ++i) {
    probs.push_back(std::max(0.0, rho.eigenvalues()(i)));
  }
  result.entropy_partial_trace = probability_entropy(probs, alpha);

  if (result.degeneracy_flag) {
    result.entropy_correlation = std::numeric_limits<double>::quiet_NaN();
  } else {
    result.entropy_correlation = finite_chain_correlation_entropy(spec, alpha);
  }
  return result;
}

double finite_chain_correlation_entropy(const FiniteChainSpec& spec, double alpha,
                                        std::int64_t block_offset) {
  if (!(alpha > 0.0)) throw DomainError("finite_chain_correlation_entropy: alpha must be > 0");
  const std::int64_t n = spec.n_sites;
  const std::int64_t L = spec.block_len;
  if (block_offset < 0 || block_offset + L > n) {
    throw DomainError("finite_chain_correlation_entropy: block outside the chain");
  }

  std::vector<std::int64_t> filled;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double eps = -2.0 * std::cos(kPi * static_cast<double>(k) / (n + 1.0)) - spec.h;
    if (std::abs(eps) < 1e-12) {
      throw DomainError("finite_chain_correlation_entropy: zero-energy mode at k = " +
                        std::to_string(k) + " (half-filling ambiguity; perturb h)");
    }
    if (eps < 0.0) filled.push_back(k);
  }

  const double norm = std::sqrt(2.0 / (n + 1.0));
  Eigen::MatrixXd phi(static_cast<Eigen::Index>(filled.size()), static_cast<Eigen::Index>(L));
  for (std::size_t f = 0; f < filled.size(); ++f) {
    for (std::int64_t m = 0; m < L; ++m) {
      const double site = static_cast<double>(block_offset + m + 1);
      phi(static_cast<Eigen::Index>(f), static_cast<Eigen::Index>(m)) =
          norm * std::sin(kPi * static_cast<double>(filled[f]) * site / (n + 1.0));
    }
  }
  const Eigen::MatrixXd C = phi.transpose() * phi;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(C, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ComputeError("finite_chain_correlation_entropy: eigensolver failed");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double p = solver.eigenvalues()(i);
    p = std::min(1.0, std::max(0.0, p));
    const double nu = 2.0 * p - 1.0;
    total += (alpha == 1.0) ? binary_entropy_term(1.0, nu) : renyi_mode_term(nu, alpha);
  }
  return total;
}

}  // namespace xxent
