#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xxentropy/asymptotics.hpp"
#include "xxentropy/entropy.hpp"

namespace xxent {

/// One output record of compute/scan. Prediction fields are absent when
/// not applicable (small-block value outside its window, any prediction at
/// the |h| = 2 boundary) and on per-row errors.
struct OutputRow {
  std::int64_t length = 0;
  double h = 0.0;
  double alpha = 1.0;
  double scaled_length = 0.0;
  std::optional<double> s_exact;
  std::optional<double> s_asymptotic;
  std::optional<double> s_small_block;
  std::optional<double> residual;  // s_exact - regime prediction
  Regime regime = Regime::large_block;
  bool critical_boundary = false;
  std::string error;  // nonempty on a failed row
};

struct ScanSpec {
  std::vector<std::int64_t> lengths;
  std::vector<double> fields_h;       // each in (-2, 2)
  std::vector<double> alphas;         // each > 0
  EntropyKind kind = EntropyKind::von_neumann;
  int threads = 0;                    // 0 = hardware concurrency
};

/// Single point: exact entropy plus the applicable prediction
/// (large-block when the scaling variable is >= 1, small-block below).
OutputRow compute_row(const ModelParams& params, double alpha, EntropyKind kind);

/// Cartesian product lengths x fields_h x alphas in that nested order.
/// Rows may be computed in parallel; output order and content are
/// independent of the thread count. Per-row failures become rows with the
/// error field set and the scan continues.
std::vector<OutputRow> run_scan(const ScanSpec& spec);

/// CSV with the fixed header
///   L,h,alpha,scaled_length,s_exact,s_asymptotic,s_small_block,residual,regime
/// LF line endings, numbers at 12 significant digits, absent values empty.
std::string to_csv(const std::vector<OutputRow>& rows);

/// JSON array of row objects, same field names and the same 12-significant-
/// digit values as the CSV; absent values are null, failed rows carry an
/// "error" member.
std::string to_json(const std::vector<OutputRow>& rows);

}  // namespace xxent
