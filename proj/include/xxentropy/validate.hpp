#pragma once

#include <functional>
#include <string>
#include <vector>

namespace xxent {

enum class ValidationLevel { fast, full };

struct ValidationReport {
  bool passed = true;
  std::vector<std::string> lines;
};

/// Cross-module invariant suite: Upsilon_1 value and dual-route agreement,
/// ED-oracle route equality, density-spectrum vs spectral-sum equivalence,
/// Fisher-Hartwig ratio convergence, trace/Frobenius identities and the
/// large-block residual. `fast` stays within L <= 200 and N <= 8; `full`
/// adds the L = 1000 solve, the L = 400 Fisher-Hartwig study, the N = 10
/// oracle grid and the N = 20000 bulk comparison. Each check produces one
/// line; on_line (when given) receives lines as they are produced.
ValidationReport run_validation(ValidationLevel level,
                                const std::function<void(const std::string&)>& on_line = {});

}  // namespace xxent
