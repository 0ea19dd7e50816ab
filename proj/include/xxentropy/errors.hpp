#pragma once

#include <stdexcept>
#include <string>

namespace xxent {

/// Invalid arguments or parameters outside the mathematical domain
/// (e.g. |h| > 2, alpha <= 0, lambda on the branch cut). Maps to exit
/// code 1 at the CLI / C API boundary.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure: eigensolver non-convergence, quadrature that does
/// not reach its tolerance, or an integrity check that signals a
/// construction bug. Maps to exit code 2.
class ComputeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xxent
