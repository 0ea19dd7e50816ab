// xxent - block entanglement entropy of the critical XX chain.
//
// Subcommands:
//   compute   one (L, h, alpha) point with exact value and predictions
//   scan      Cartesian parameter sweep, CSV or JSON
//   validate  cross-module invariant suite (fast | full)
//
// The tool is a client of the C API in xxent.h only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xxent.h"

namespace {

int fail(int status) {
  std::cerr << "error: " << xxent_last_error() << "\n";
  return status;
}

bool write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int kind_code(const std::string& kind) {
  if (kind == "vn") return XXENT_KIND_VON_NEUMANN;
  if (kind == "renyi") return XXENT_KIND_RENYI;
  if (kind == "tsallis") return XXENT_KIND_TSALLIS;
  return -1;
}

void report_line(const char* line, void*) { std::cout << line << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic block entanglement entropy of the XX chain"};
  app.set_help_flag("--help", "Print help");  // long form only; --h is the field option
  app.set_version_flag("--version", std::string(xxent_version()));
  app.require_subcommand(1);

  // compute
  double h = 0.0;
  std::int64_t length = 1;
  double alpha = 1.0;
  std::string kind = "vn";
  std::string format = "csv";
  std::string out_path;

  CLI::App* compute = app.add_subcommand("compute", "Single-point computation");
  compute->set_help_flag("--help", "Print help");
  compute->add_option("--h", h, "Transverse field, |h| <= 2")->capture_default_str();
  compute->add_option("-L,--length", length, "Block length")->required();
  compute->add_option("--alpha", alpha, "Renyi/Tsallis order")->capture_default_str();
  compute->add_option("--kind", kind, "Entropy kind: vn, renyi, tsallis")
      ->check(CLI::IsMember({"vn", "renyi", "tsallis"}))
      ->capture_default_str();
  compute->add_option("--format", format, "Output format: csv, json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  compute->add_option("--out", out_path, "Write output to a file instead of stdout");

  // scan
  std::vector<std::int64_t> lengths;
  std::vector<double> fields;
  std::vector<double> alphas{1.0};
  int threads = 0;

  CLI::App* scan = app.add_subcommand("scan", "Parameter sweep over lengths x fields x alphas");
  scan->set_help_flag("--help", "Print help");
  scan->add_option("-L,--length", lengths, "Block lengths")->required()->expected(-1);
  scan->add_option("--h", fields, "Transverse fields, each in (-2, 2)")->required()->expected(-1);
  scan->add_option("--alpha", alphas, "Renyi/Tsallis orders")->expected(-1)
      ->capture_default_str();
  scan->add_option("--kind", kind, "Entropy kind: vn, renyi, tsallis")
      ->check(CLI::IsMember({"vn", "renyi", "tsallis"}))
      ->capture_default_str();
  scan->add_option("--format", format, "Output format: csv, json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  scan->add_option("--out", out_path, "Write output to a file instead of stdout");
  scan->add_option("--threads", threads, "Worker threads (0 = hardware)")->capture_default_str();

  // validate
  std::string level = "fast";
  CLI::App* validate = app.add_subcommand("validate", "Run the cross-module invariant suite");
  validate->add_option("--level", level, "fast or full")
      ->check(CLI::IsMember({"fast", "full"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (const char* tol = std::getenv("ENTROPY_QUAD_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(tol, &end);
    if (end == tol || !(value > 0.0)) {
      std::cerr << "error: ENTROPY_QUAD_TOL must be a positive number\n";
      return 1;
    }
    if (int rc = xxent_set_quadrature_abs_tol(value); rc != XXENT_OK) return fail(rc);
  }

  if (compute->parsed()) {
    // Unlike scans, a single compute accepts the |h| = 2 boundary (zero
    // entropy, no predictions).
    xxent_row row;
    if (int rc = xxent_compute_row(length, h, alpha, kind_code(kind), &row); rc != XXENT_OK) {
      return fail(rc);
    }
    char* text = nullptr;
    const int fmt = format == "json" ? XXENT_FORMAT_JSON : XXENT_FORMAT_CSV;
    if (int rc = xxent_row_render(&row, fmt, &text); rc != XXENT_OK) return fail(rc);
    const bool ok = write_output(text, out_path);
    xxent_string_free(text);
    if (!ok) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    return 0;
  }

  if (scan->parsed()) {
    xxent_scan_spec spec{lengths.data(),
                         static_cast<std::int64_t>(lengths.size()),
                         fields.data(),
                         static_cast<std::int64_t>(fields.size()),
                         alphas.data(),
                         static_cast<std::int64_t>(alphas.size()),
                         kind_code(kind),
                         threads};
    xxent_scan* result = nullptr;
    if (int rc = xxent_scan_run(&spec, &result); rc != XXENT_OK) return fail(rc);
    char* text = nullptr;
    const int fmt = format == "json" ? XXENT_FORMAT_JSON : XXENT_FORMAT_CSV;
    if (int rc = xxent_scan_render(result, fmt, &text); rc != XXENT_OK) {
      xxent_scan_free(result);
      return fail(rc);
    }
    const bool ok = write_output(text, out_path);
    xxent_string_free(text);
    xxent_scan_free(result);
    if (!ok) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    return 0;
  }

  // validate
  const int lvl = level == "full" ? XXENT_VALIDATE_FULL : XXENT_VALIDATE_FAST;
  const int rc = xxent_validate(lvl, report_line, nullptr);
  if (rc == XXENT_OK) {
    std::cout << "validation passed\n";
    return 0;
  }
  if (rc == XXENT_ERR_VALIDATION) {
    std::cout << "validation FAILED\n";
    return 3;
  }
  return fail(rc);
}
