#include "xxentropy/scan.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "xxentropy/toeplitz.hpp"

namespace xxent {

namespace {

double tsallis_from_renyi(double s_renyi, double alpha) {
  if (alpha == 1.0) return s_renyi;
  return std::expm1((1.0 - alpha) * s_renyi) / (1.0 - alpha);
}

// Prediction for the requested kind: the asymptotic laws are stated for
// von Neumann / Renyi; Tsallis is their algebraic transform.
double predict(const AsymptoticPrediction& renyi_prediction, EntropyKind kind, double alpha) {
  if (kind == EntropyKind::tsallis) return tsallis_from_renyi(renyi_prediction.value, alpha);
  return renyi_prediction.value;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void fill_row(OutputRow& row, const ModelParams& params, double alpha, EntropyKind kind) {
  row.s_exact = block_entropy(params, alpha, kind).value;
  if (params.at_critical_boundary()) {
    row.critical_boundary = true;
    row.regime = Regime::small_block;  // scaling variable 0; no prediction applies
    return;
  }
  row.regime = params.script_length >= 1.0 ? Regime::large_block : Regime::small_block;
  row.s_asymptotic = predict(large_block_entropy(params, alpha), kind, alpha);
  if (row.regime == Regime::small_block) {
    row.s_small_block = predict(small_block_entropy(params, alpha), kind, alpha);
    row.residual = *row.s_exact - *row.s_small_block;
  } else {
    row.residual = *row.s_exact - *row.s_asymptotic;
  }
}

}  // namespace

OutputRow compute_row(const ModelParams& params, double alpha, EntropyKind kind) {
  if (kind == EntropyKind::von_neumann && alpha != 1.0) {
    throw DomainError("compute_row: von Neumann entropy fixes alpha = 1");
  }
  OutputRow row;
  row.length = params.length;
  row.h = params.h;
  row.alpha = alpha;
  row.scaled_length = params.script_length;
  fill_row(row, params, alpha, kind);
  return row;
}

std::vector<OutputRow> run_scan(const ScanSpec& spec) {
  if (spec.lengths.empty() || spec.fields_h.empty() || spec.alphas.empty()) {
    throw DomainError("run_scan: lengths, fields and alphas must be non-empty");
  }
  for (double h : spec.fields_h) {
    if (!(std::abs(h) < kCriticalField)) {
      throw DomainError("run_scan: scan fields must lie strictly inside (-2, 2)");
    }
  }
  for (double a : spec.alphas) {
    if (!(a > 0.0)) throw DomainError("run_scan: alphas must be > 0");
    if (spec.kind == EntropyKind::von_neumann && a != 1.0) {
      throw DomainError("run_scan: von Neumann entropy fixes alpha = 1");
    }
  }
  for (std::int64_t L : spec.lengths) {
    if (L < 1) throw DomainError("run_scan: lengths must be >= 1");
  }

  const std::size_t n_len = spec.lengths.size();
  const std::size_t n_h = spec.fields_h.size();
  const std::size_t n_alpha = spec.alphas.size();
  std::vector<OutputRow> rows(n_len * n_h * n_alpha);

  // One task per (L, h): the spectrum is the expensive part and is shared
  // across all alphas of that point. Rows land in canonical slots, so the
  // output is identical for any thread count.
  const std::size_t n_tasks = n_len * n_h;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t task = next.fetch_add(1); task < n_tasks; task = next.fetch_add(1)) {
      const std::size_t il = task / n_h;
      const std::size_t ih = task % n_h;
      const std::int64_t L = spec.lengths[il];
      const double h = spec.fields_h[ih];
      for (std::size_t ia = 0; ia < n_alpha; ++ia) {
        OutputRow& row = rows[(il * n_h + ih) * n_alpha + ia];
        row.length = L;
        row.h = h;
        row.alpha = spec.alphas[ia];
        try {
          const ModelParams params(L, h);
          row.scaled_length = params.script_length;
          fill_row(row, params, spec.alphas[ia], spec.kind);
        } catch (const std::exception& e) {
          row.error = e.what();
          row.scaled_length = scaled_length(L, h);  // lists were validated upfront
        }
      }
    }
  };

  unsigned n_threads = spec.threads > 0 ? static_cast<unsigned>(spec.threads)
                                        : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(n_tasks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

std::string to_csv(const std::vector<OutputRow>& rows) {
  std::string out = "L,h,alpha,scaled_length,s_exact,s_asymptotic,s_small_block,residual,regime\n";
  for (const OutputRow& r : rows) {
    out += std::to_string(r.length);
    out += ',';
    out += format_number(r.h);
    out += ',';
    out += format_number(r.alpha);
    out += ',';
    out += format_number(r.scaled_length);
    out += ',';
    if (r.s_exact) out += format_number(*r.s_exact);
    out += ',';
    if (r.s_asymptotic) out += format_number(*r.s_asymptotic);
    out += ',';
    if (r.s_small_block) out += format_number(*r.s_small_block);
    out += ',';
    if (r.residual) out += format_number(*r.residual);
    out += ',';
    if (!r.error.empty()) {
      out += "error";
    } else {
      out += r.regime == Regime::large_block ? "largeL" : "smallL";
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<OutputRow>& rows) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const OutputRow& r = rows[i];
    auto field = [](const std::optional<double>& v) {
      return v && std::isfinite(*v) ? format_number(*v) : std::string("null");
    };
    out += "  {\"L\": " + std::to_string(r.length);
    out += ", \"h\": " + format_number(r.h);
    out += ", \"alpha\": " + format_number(r.alpha);
    out += ", \"scaled_length\": " + format_number(r.scaled_length);
    out += ", \"s_exact\": " + field(r.s_exact);
    out += ", \"s_asymptotic\": " + field(r.s_asymptotic);
    out += ", \"s_small_block\": " + field(r.s_small_block);
    out += ", \"residual\": " + field(r.residual);
    if (!r.error.empty()) {
      out += ", \"regime\": \"error\", \"error\": \"" + json_escape(r.error) + "\"";
    } else {
      out += std::string(", \"regime\": \"") +
             (r.regime == Regime::large_block ? "largeL" : "smallL") + "\"";
    }
    out += i + 1 < rows.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

}  // namespace xxent
