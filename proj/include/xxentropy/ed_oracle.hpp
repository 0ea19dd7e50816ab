#pragma once

#include <cstdint>

#include "xxentropy/errors.hpp"

namespace xxent {

/// Finite open XX chain used as an independent ground truth. The block is
/// the first block_len sites. Exact diagonalization is capped at 12 sites
/// (2^N Hilbert space); the single-particle correlation route has no such
/// cap and is also used for bulk-convergence studies at N in the thousands.
struct FiniteChainSpec {
  std::int64_t n_sites = 2;
  std::int64_t block_len = 1;
  double h = 0.0;

  FiniteChainSpec(std::int64_t sites, std::int64_t block, double field);
};

struct OracleResult {
  double entropy_partial_trace = 0.0;
  double entropy_correlation = 0.0;  // NaN when degenerate
  double ground_energy = 0.0;
  bool degeneracy_flag = false;
};

/// Builds the 2^N x 2^N open-boundary Hamiltonian (magnetization-sector
/// blocked), takes the lowest eigenvector, forms the block reduced density
/// matrix by partial trace (site 1 is the slowest-varying index) and
/// returns its entropy (von Neumann for alpha = 1, Renyi otherwise),
/// together with the same entropy from the finite-chain correlation
/// matrix. A many-body gap below 1e-10 sets degeneracy_flag and skips the
/// correlation route (no canonical occupation exists).
OracleResult ed_ground_state_entropy(const FiniteChainSpec& spec, double alpha);

/// Free-fermion route: open-chain eigenmodes
///   phi_k(n) = sqrt(2/(N+1)) sin(pi k n/(N+1)),  eps_k = -2 cos(pi k/(N+1)) - h,
/// filled set {k : eps_k < 0}; block correlation matrix
///   C_{mn} = sum_filled phi_k(offset+m) phi_k(offset+n),  m, n <= block_len;
/// eigenvalues p mapped to nu = 2p - 1 and summed through e(1, .) or
/// s_alpha. A mode with |eps_k| < 1e-12 is a half-filling ambiguity error.
/// block_offset = 0 is the first-block convention; pass (N - L)/2 for a
/// centered block when comparing against the infinite lattice.
double finite_chain_correlation_entropy(const FiniteChainSpec& spec, double alpha,
                                        std::int64_t block_offset = 0);

}  // namespace xxent
