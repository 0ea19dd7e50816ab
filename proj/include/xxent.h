/* xxent.h - C interface to the XX-chain block entanglement entropy library.
 *
 * All functions return a status code (XXENT_OK on success) and write
 * results through out-pointers. On failure xxent_last_error() returns a
 * thread-local description of the most recent error. Handles are opaque
 * and must be released with the matching *_free function.
 */
#ifndef XXENT_H
#define XXENT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI uses them directly as exit codes. */
#define XXENT_OK 0
#define XXENT_ERR_DOMAIN 1     /* invalid argument / outside mathematical domain */
#define XXENT_ERR_COMPUTE 2    /* numerical failure or integrity violation */
#define XXENT_ERR_VALIDATION 3 /* a validation-suite check failed */

/* Entropy kinds. */
#define XXENT_KIND_VON_NEUMANN 0
#define XXENT_KIND_RENYI 1
#define XXENT_KIND_TSALLIS 2

/* Asymptotic regimes. */
#define XXENT_REGIME_LARGE 0
#define XXENT_REGIME_SMALL 1

/* Validation levels. */
#define XXENT_VALIDATE_FAST 0
#define XXENT_VALIDATE_FULL 1

const char* xxent_version(void);
const char* xxent_last_error(void);

/* --- model ------------------------------------------------------------ */

/* k_F = arccos(|h|/2); domain error for |h| > 2. */
int xxent_fermi_momentum(double h, double* out);

/* Scaling variable 2 L sqrt(1 - (h/2)^2). */
int xxent_scaled_length(int64_t length, double h, double* out);

/* --- correlation spectrum ---------------------------------------------- */

typedef struct xxent_spectrum xxent_spectrum;

/* Builds G_L for (L, h) and diagonalizes it. Requires |h| < 2, 1 <= L <= 20000. */
int xxent_spectrum_create(int64_t length, double h, xxent_spectrum** out);
void xxent_spectrum_free(xxent_spectrum* spectrum);
int64_t xxent_spectrum_order(const xxent_spectrum* spectrum);
/* Copies the ascending eigenvalues; capacity must be >= order. */
int xxent_spectrum_values(const xxent_spectrum* spectrum, double* buffer, int64_t capacity);

/* Entropy of the block from a spectrum. kind is XXENT_KIND_*; alpha is
 * ignored for von Neumann (fixed to 1). */
int xxent_entropy(const xxent_spectrum* spectrum, int kind, double alpha, double* out);

/* Convenience without a handle; handles |h| = 2 by returning 0. */
int xxent_block_entropy(int64_t length, double h, int kind, double alpha, double* out);

/* --- asymptotics -------------------------------------------------------- */

/* Overrides the default absolute quadrature tolerance (ENTROPY_QUAD_TOL). */
int xxent_set_quadrature_abs_tol(double abs_tol);

int xxent_upsilon1(double* out);
int xxent_upsilon_alpha(double alpha, double* out);

/* Large-block prediction ((1+1/alpha)/6) ln scriptL + Upsilon; domain error
 * when the scaling variable is zero. */
int xxent_large_block_prediction(int64_t length, double h, double alpha, double* out);
/* Small-block prediction; requires 0 < scaling variable < 1. */
int xxent_small_block_prediction(int64_t length, double h, double alpha, double* out);

/* --- Fisher-Hartwig ------------------------------------------------------ */

/* beta(lambda) = (1/2 pi i) ln((lambda+1)/(lambda-1)); lambda off [-1,1]. */
int xxent_beta_exponent(double lambda_re, double lambda_im, double* beta_re, double* beta_im);

/* Asymptotic determinant of lambda I - G_L. */
int xxent_fh_determinant(double lambda_re, double lambda_im, int64_t length, double h,
                         double* out_re, double* out_im);

/* Exact determinant prod (lambda - nu_m) from a spectrum handle. */
int xxent_exact_determinant(const xxent_spectrum* spectrum, double lambda_re, double lambda_im,
                            double* out_re, double* out_im);

/* |exact/FH| and its phase via the log-domain ratio (overflow safe). */
int xxent_fh_ratio(const xxent_spectrum* spectrum, double lambda_re, double lambda_im,
                   double* ratio_re, double* ratio_im);

/* --- finite-chain oracle ------------------------------------------------- */

/* Open-chain exact diagonalization (n_sites <= 12) against the free-fermion
 * correlation route. degenerate != 0 means the ground state is degenerate
 * and entropy_correlation is NaN. */
int xxent_ed_oracle(int64_t n_sites, int64_t block_len, double h, double alpha,
                    double* entropy_partial_trace, double* entropy_correlation,
                    double* ground_energy, int* degenerate);

/* --- compute / scan / validate ------------------------------------------- */

typedef struct {
  int64_t length;
  double h;
  double alpha;
  double scaled_length;
  double s_exact;       /* NaN when absent */
  double s_asymptotic;  /* NaN when absent */
  double s_small_block; /* NaN when absent */
  double residual;      /* NaN when absent */
  int regime;           /* XXENT_REGIME_* */
  int critical_boundary;
} xxent_row;

int xxent_compute_row(int64_t length, double h, double alpha, int kind, xxent_row* out);

/* Renders a single row with the scan header, same bytes as a one-cell scan.
 * format is XXENT_FORMAT_*; release the buffer with xxent_string_free. */
int xxent_row_render(const xxent_row* row, int format, char** out);

typedef struct {
  const int64_t* lengths;
  int64_t n_lengths;
  const double* fields_h;
  int64_t n_fields;
  const double* alphas;
  int64_t n_alphas;
  int kind;
  int threads; /* 0 = hardware concurrency */
} xxent_scan_spec;

typedef struct xxent_scan xxent_scan;

int xxent_scan_run(const xxent_scan_spec* spec, xxent_scan** out);
void xxent_scan_free(xxent_scan* scan);
int64_t xxent_scan_size(const xxent_scan* scan);
int xxent_scan_row(const xxent_scan* scan, int64_t index, xxent_row* out);
/* Error text of a failed row ("" if the row succeeded). */
const char* xxent_scan_row_error(const xxent_scan* scan, int64_t index);

#define XXENT_FORMAT_CSV 0
#define XXENT_FORMAT_JSON 1

/* Renders the scan (deterministic bytes, 12 significant digits). The
 * returned buffer must be released with xxent_string_free. */
int xxent_scan_render(const xxent_scan* scan, int format, char** out);
void xxent_string_free(char* text);

typedef void (*xxent_report_fn)(const char* line, void* user);

/* Runs the validation suite; each report line is passed to callback (may
 * be NULL). Returns XXENT_OK when every check passes, XXENT_ERR_VALIDATION
 * otherwise. */
int xxent_validate(int level, xxent_report_fn callback, void* user);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* XXENT_H */
