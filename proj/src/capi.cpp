#include "xxent.h"

#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "xxentropy/asymptotics.hpp"
#include "xxentropy/ed_oracle.hpp"
#include "xxentropy/entropy.hpp"
#include "xxentropy/fisher_hartwig.hpp"
#include "xxentropy/scan.hpp"
#include "xxentropy/validate.hpp"

struct xxent_spectrum {
  xxent::CorrelationSpectrum spectrum;
};

struct xxent_scan {
  std::vector<xxent::OutputRow> rows;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

template <class Fn>
int guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return XXENT_OK;
  } catch (const xxent::DomainError& e) {
    set_error(e.what());
    return XXENT_ERR_DOMAIN;
  } catch (const xxent::ComputeError& e) {
    set_error(e.what());
    return XXENT_ERR_COMPUTE;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return XXENT_ERR_COMPUTE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return XXENT_ERR_COMPUTE;
  }
}

xxent::EntropyKind to_kind(int kind) {
  switch (kind) {
    case XXENT_KIND_VON_NEUMANN: return xxent::EntropyKind::von_neumann;
    case XXENT_KIND_RENYI: return xxent::EntropyKind::renyi;
    case XXENT_KIND_TSALLIS: return xxent::EntropyKind::tsallis;
    default: throw xxent::DomainError("unknown entropy kind code");
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw xxent::DomainError(message);
}

void pack_row(const xxent::OutputRow& row, xxent_row* out) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out->length = row.length;
  out->h = row.h;
  out->alpha = row.alpha;
  out->scaled_length = row.scaled_length;
  out->s_exact = row.s_exact.value_or(nan);
  out->s_asymptotic = row.s_asymptotic.value_or(nan);
  out->s_small_block = row.s_small_block.value_or(nan);
  out->residual = row.residual.value_or(nan);
  out->regime = row.regime == xxent::Regime::large_block ? XXENT_REGIME_LARGE : XXENT_REGIME_SMALL;
  out->critical_boundary = row.critical_boundary ? 1 : 0;
}

xxent::OutputRow unpack_row(const xxent_row& row) {
  auto opt = [](double v) {
    return std::isnan(v) ? std::optional<double>{} : std::optional<double>{v};
  };
  xxent::OutputRow out;
  out.length = row.length;
  out.h = row.h;
  out.alpha = row.alpha;
  out.scaled_length = row.scaled_length;
  out.s_exact = opt(row.s_exact);
  out.s_asymptotic = opt(row.s_asymptotic);
  out.s_small_block = opt(row.s_small_block);
  out.residual = opt(row.residual);
  out.regime =
      row.regime == XXENT_REGIME_LARGE ? xxent::Regime::large_block : xxent::Regime::small_block;
  out.critical_boundary = row.critical_boundary != 0;
  return out;
}

char* copy_to_c_buffer(const std::string& text) {
  char* buffer = new char[text.size() + 1];
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  return buffer;
}

}  // namespace

extern "C" {

const char* xxent_version(void) { return "1.0.0"; }

const char* xxent_last_error(void) { return g_last_error.c_str(); }

int xxent_fermi_momentum(double h, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = xxent::fermi_momentum(h);
  });
}

int xxent_scaled_length(int64_t length, double h, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = xxent::scaled_length(length, h);
  });
}

int xxent_spectrum_create(int64_t length, double h, xxent_spectrum** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const xxent::ModelParams params(length, h);
    require(!params.at_critical_boundary(),
            "spectrum undefined at |h| = 2 (symbol loses its jump)");
    auto handle = std::make_unique<xxent_spectrum>();
    handle->spectrum =
        xxent::correlation_spectrum(xxent::build_sign_matrix(length, params.k_fermi));
    *out = handle.release();
  });
}

void xxent_spectrum_free(xxent_spectrum* spectrum) { delete spectrum; }

int64_t xxent_spectrum_order(const xxent_spectrum* spectrum) {
  return spectrum ? spectrum->spectrum.order : 0;
}

int xxent_spectrum_values(const xxent_spectrum* spectrum, double* buffer, int64_t capacity) {
  return guarded([&] {
    require(spectrum != nullptr && buffer != nullptr, "null argument");
    require(capacity >= spectrum->spectrum.order, "buffer too small");
    std::memcpy(buffer, spectrum->spectrum.values.data(),
                sizeof(double) * spectrum->spectrum.values.size());
  });
}

int xxent_entropy(const xxent_spectrum* spectrum, int kind, double alpha, double* out) {
  return guarded([&] {
    require(spectrum != nullptr && out != nullptr, "null argument");
    switch (to_kind(kind)) {
      case xxent::EntropyKind::von_neumann:
        *out = xxent::von_neumann_entropy(spectrum->spectrum).value;
        break;
      case xxent::EntropyKind::renyi:
        *out = xxent::renyi_entropy(spectrum->spectrum, alpha).value;
        break;
      case xxent::EntropyKind::tsallis:
        *out = xxent::tsallis_entropy(spectrum->spectrum, alpha).value;
        break;
    }
  });
}

int xxent_block_entropy(int64_t length, double h, int kind, double alpha, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const xxent::ModelParams params(length, h);
    const double a = (to_kind(kind) == xxent::EntropyKind::von_neumann) ? 1.0 : alpha;
    *out = xxent::block_entropy(params, a, to_kind(kind)).value;
  });
}

int xxent_set_quadrature_abs_tol(double abs_tol) {
  return guarded([&] {
    xxent::QuadratureConfig config = xxent::default_quadrature();
    config.abs_tol = abs_tol;
    xxent::set_default_quadrature(config);
  });
}

int xxent_upsilon1(double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = xxent::upsilon1();
  });
}

int xxent_upsilon_alpha(double alpha, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = xxent::upsilon_alpha(alpha);
  });
}

int xxent_large_block_prediction(int64_t length, double h, double alpha, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = xxent::large_block_entropy(xxent::ModelParams(length, h), alpha).value;
  });
}

int xxent_small_block_prediction(int64_t length, double h, double alpha, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = xxent::small_block_entropy(xxent::ModelParams(length, h), alpha).value;
  });
}

int xxent_beta_exponent(double lambda_re, double lambda_im, double* beta_re, double* beta_im) {
  return guarded([&] {
    require(beta_re != nullptr && beta_im != nullptr, "null output pointer");
    const auto je = xxent::beta_exponent({lambda_re, lambda_im});
    *beta_re = je.beta.real();
    *beta_im = je.beta.imag();
  });
}

int xxent_fh_determinant(double lambda_re, double lambda_im, int64_t length, double h,
                         double* out_re, double* out_im) {
  return guarded([&] {
    require(out_re != nullptr && out_im != nullptr, "null output pointer");
    const double k_fermi = xxent::fermi_momentum(h);
    const auto value = xxent::fh_determinant({lambda_re, lambda_im}, length, k_fermi);
    *out_re = value.real();
    *out_im = value.imag();
  });
}

int xxent_exact_determinant(const xxent_spectrum* spectrum, double lambda_re, double lambda_im,
                            double* out_re, double* out_im) {
  return guarded([&] {
    require(spectrum != nullptr && out_re != nullptr && out_im != nullptr, "null argument");
    const auto value = xxent::exact_determinant({lambda_re, lambda_im}, spectrum->spectrum);
    *out_re = value.real();
    *out_im = value.imag();
  });
}

int xxent_fh_ratio(const xxent_spectrum* spectrum, double lambda_re, double lambda_im,
                   double* ratio_re, double* ratio_im) {
  return guarded([&] {
    require(spectrum != nullptr && ratio_re != nullptr && ratio_im != nullptr, "null argument");
    const auto ev = xxent::fh_evaluate({lambda_re, lambda_im}, spectrum->spectrum);
    *ratio_re = ev.ratio.real();
    *ratio_im = ev.ratio.imag();
  });
}

int xxent_ed_oracle(int64_t n_sites, int64_t block_len, double h, double alpha,
                    double* entropy_partial_trace, double* entropy_correlation,
                    double* ground_energy, int* degenerate) {
  return guarded([&] {
    require(entropy_partial_trace != nullptr && entropy_correlation != nullptr &&
                ground_energy != nullptr && degenerate != nullptr,
            "null output pointer");
    const auto result =
        xxent::ed_ground_state_entropy(xxent::FiniteChainSpec(n_sites, block_len, h), alpha);
    *entropy_partial_trace = result.entropy_partial_trace;
    *entropy_correlation = result.entropy_correlation;
    *ground_energy = result.ground_energy;
    *degenerate = result.degeneracy_flag ? 1 : 0;
  });
}

int xxent_compute_row(int64_t length, double h, double alpha, int kind, xxent_row* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const xxent::OutputRow row =
        xxent::compute_row(xxent::ModelParams(length, h), alpha, to_kind(kind));
    pack_row(row, out);
  });
}

int xxent_scan_run(const xxent_scan_spec* spec, xxent_scan** out) {
  return guarded([&] {
    require(spec != nullptr && out != nullptr, "null argument");
    xxent::ScanSpec s;
    s.lengths.assign(spec->lengths, spec->lengths + spec->n_lengths);
    s.fields_h.assign(spec->fields_h, spec->fields_h + spec->n_fields);
    s.alphas.assign(spec->alphas, spec->alphas + spec->n_alphas);
    s.kind = to_kind(spec->kind);
    s.threads = spec->threads;
    auto handle = std::make_unique<xxent_scan>();
    handle->rows = xxent::run_scan(s);
    *out = handle.release();
  });
}

void xxent_scan_free(xxent_scan* scan) { delete scan; }

int64_t xxent_scan_size(const xxent_scan* scan) {
  return scan ? static_cast<int64_t>(scan->rows.size()) : 0;
}

int xxent_scan_row(const xxent_scan* scan, int64_t index, xxent_row* out) {
  return guarded([&] {
    require(scan != nullptr && out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int64_t>(scan->rows.size()), "row index out of range");
    pack_row(scan->rows[static_cast<std::size_t>(index)], out);
  });
}

const char* xxent_scan_row_error(const xxent_scan* scan, int64_t index) {
  if (!scan || index < 0 || index >= static_cast<int64_t>(scan->rows.size())) return "";
  return scan->rows[static_cast<std::size_t>(index)].error.c_str();
}

int xxent_scan_render(const xxent_scan* scan, int format, char** out) {
  return guarded([&] {
    require(scan != nullptr && out != nullptr, "null argument");
    std::string text;
    if (format == XXENT_FORMAT_CSV) {
      text = xxent::to_csv(scan->rows);
    } else if (format == XXENT_FORMAT_JSON) {
      text = xxent::to_json(scan->rows);
    } else {
      throw xxent::DomainError("unknown output format code");
    }
    *out = copy_to_c_buffer(text);
  });
}

int xxent_row_render(const xxent_row* row, int format, char** out) {
  return guarded([&] {
    require(row != nullptr && out != nullptr, "null argument");
    const std::vector<xxent::OutputRow> rows{unpack_row(*row)};
    if (format == XXENT_FORMAT_CSV) {
      *out = copy_to_c_buffer(xxent::to_csv(rows));
    } else if (format == XXENT_FORMAT_JSON) {
      *out = copy_to_c_buffer(xxent::to_json(rows));
    } else {
      throw xxent::DomainError("unknown output format code");
    }
  });
}

void xxent_string_free(char* text) { delete[] text; }

int xxent_validate(int level, xxent_report_fn callback, void* user) {
  int status = XXENT_OK;
  const int rc = guarded([&] {
    const auto lvl =
        level == XXENT_VALIDATE_FULL ? xxent::ValidationLevel::full : xxent::ValidationLevel::fast;
    const auto report = xxent::run_validation(lvl, [&](const std::string& line) {
      if (callback) callback(line.c_str(), user);
    });
    if (!report.passed) {
      set_error("validation suite reported failures");
      status = XXENT_ERR_VALIDATION;
    }
  });
  return rc != XXENT_OK ? rc : status;
}

}  // extern "C"
