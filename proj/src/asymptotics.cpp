#include "xxentropy/asymptotics.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "xxentropy/entropy.hpp"
#include "xxentropy/quadrature.hpp"

namespace xxent {

namespace {

constexpr double kPi = std::numbers::pi;

std::mutex g_config_mutex;
QuadratureConfig g_default_config{};

std::uint64_t bits(double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, sizeof u);
  return u;
}

// Memo cache for the Upsilon constants, keyed by (route, alpha, config).
using MemoKey = std::array<std::uint64_t, 6>;
std::mutex g_memo_mutex;
std::map<MemoKey, double> g_memo;

MemoKey memo_key(int route, double alpha, const QuadratureConfig& c) {
  return {static_cast<std::uint64_t>(route), bits(alpha),      bits(c.abs_tol),
          bits(c.rel_tol),                   bits(c.split_point), bits(c.series_cutoff)};
}

void require_valid(const QuadratureConfig& c) {
  if (!c.valid()) throw DomainError("QuadratureConfig: tolerances and split points must be positive");
}

}  // namespace

QuadratureConfig default_quadrature() {
  std::lock_guard<std::mutex> lock(g_config_mutex);
  return g_default_config;
}

void set_default_quadrature(const QuadratureConfig& config) {
  require_valid(config);
  std::lock_guard<std::mutex> lock(g_config_mutex);
  g_default_config = config;
}

std::complex<double> digamma(std::complex<double> z) {
  if (!(z.real() > 0.0)) throw DomainError("digamma: implemented for Re z > 0");
  std::complex<double> acc = 0.0;
  while (std::abs(z) < 12.0) {  // psi(z) = psi(z+1) - 1/z
    acc -= 1.0 / z;
    z += 1.0;
  }
  // Asymptotic expansion: ln z - 1/(2z) - sum B_{2k} / (2k z^{2k}).
  static constexpr double c[7] = {1.0 / 12.0,  -1.0 / 120.0,     1.0 / 252.0, -1.0 / 240.0,
                                  1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
  const std::complex<double> inv = 1.0 / z;
  const std::complex<double> inv2 = inv * inv;
  std::complex<double> sum = std::log(z) - 0.5 * inv;
  std::complex<double> power = inv2;
  for (double ck : c) {
    sum -= ck * power;
    power *= inv2;
  }
  return acc + sum;
}

double digamma_critical_line(double w) {
  return digamma(std::complex<double>(0.5, std::abs(w))).real();
}

namespace detail {

double upsilon1_bracket(double t) {
  const double sh = std::sinh(0.5 * t);
  const double sh2 = sh * sh;
  return std::exp(-t) / (3.0 * t) + 1.0 / (t * sh2) - std::cosh(0.5 * t) / (2.0 * sh2 * sh);
}

double upsilon1_bracket_series(double t) {
  // Taylor coefficients of the bracket; the 4/t^3 singularities of the two
  // hyperbolic terms cancel against each other and against e^{-t}/(3t).
  static constexpr double c[14] = {
      -1.0 / 3.0,
      1.0 / 5.0,
      -1.0 / 18.0,
      1.0 / 84.0,
      -1.0 / 360.0,
      1.0 / 1800.0,
      -1.0 / 15120.0,
      1.0 / 221760.0,
      -1.0 / 1088640.0,
      191.0 / 825552000.0,
      -1.0 / 119750400.0,
      -1.0 / 239500800.0,
      -1.0 / 18681062400.0,
      617.0 / 3705077376000.0,
  };
  double acc = 0.0;
  for (int k = 13; k >= 0; --k) acc = acc * t + c[k];
  return acc;
}

double upsilon_alpha_quadrature(double alpha, const QuadratureConfig& config) {
  if (!(alpha > 0.0)) throw DomainError("upsilon_alpha: alpha must be > 0");
  require_valid(config);
  // x = tanh(pi w) removes the logarithmic endpoint behavior of the
  // x-integral; s_alpha(tanh pi w) decays like e^{-2 pi min(alpha,1) w}.
  // The mode weights are kept in the log domain: (1 -+ tanh(pi w))/2
  // evaluated directly goes through 1 - (1 - eps) cancellation and turns
  // into an ulp staircase the adaptive quadrature cannot resolve.
  const double w_max = std::min(240.0, std::max(20.0, 35.0 / (2.0 * kPi * std::min(alpha, 1.0))));
  auto integrand = [alpha](double w) {
    const double t = 2.0 * kPi * w;
    const double decay = std::exp(-t);
    const double log_p = -std::log1p(decay);  // ln((1 + tanh(pi w))/2)
    const double log_q = log_p - t;           // ln((1 - tanh(pi w))/2)
    double s;
    if (alpha == 1.0) {
      s = -(std::exp(log_p) * log_p + std::exp(log_q) * log_q);
    } else {
      const double a = alpha * log_p;
      const double b = alpha * log_q;  // b <= a
      s = (a + std::log1p(std::exp(b - a))) / (1.0 - alpha);
    }
    return s == 0.0 ? 0.0 : s * digamma_critical_line(w);
  };
  const double integral =
      integrate_adaptive(integrand, 0.0, w_max, config.abs_tol, config.rel_tol);
  return -(4.0 / kPi) * integral;
}

}  // namespace detail

double upsilon1(const QuadratureConfig& config) {
  require_valid(config);
  const MemoKey key = memo_key(0, 1.0, config);
  std::lock_guard<std::mutex> lock(g_memo_mutex);  // at-most-once population
  auto it = g_memo.find(key);
  if (it != g_memo.end()) return it->second;

  const double cutoff = std::min(config.series_cutoff, 0.5);
  const double head = integrate_adaptive(detail::upsilon1_bracket_series, 0.0, cutoff,
                                         config.abs_tol, config.rel_tol);
  const double body = integrate_adaptive(detail::upsilon1_bracket, cutoff, config.split_point,
                                         config.abs_tol, config.rel_tol);
  // Beyond t = 60 the bracket is ~ -e^{-t}(2 - 4/t - 1/(3t)); the tail is
  // below 1e-25 and ignored.
  const double value = -(head + body);
  return g_memo.emplace(key, value).first->second;
}

double upsilon1() { return upsilon1(default_quadrature()); }

double upsilon_alpha(double alpha, const QuadratureConfig& config) {
  if (!(alpha > 0.0)) throw DomainError("upsilon_alpha: alpha must be > 0");
  if (alpha == 1.0) return upsilon1(config);
  const MemoKey key = memo_key(1, alpha, config);
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  auto it = g_memo.find(key);
  if (it != g_memo.end()) return it->second;
  const double value = detail::upsilon_alpha_quadrature(alpha, config);
  return g_memo.emplace(key, value).first->second;
}

double upsilon_alpha(double alpha) { return upsilon_alpha(alpha, default_quadrature()); }

AsymptoticPrediction large_block_entropy(const ModelParams& params, double alpha,
                                         const QuadratureConfig& config) {
  if (!(alpha > 0.0)) throw DomainError("large_block_entropy: alpha must be > 0");
  const double scriptL = params.script_length;
  if (!(scriptL > 0.0)) {
    throw DomainError("large_block_entropy: scaling variable must be > 0 (got " +
                      std::to_string(scriptL) + ")");
  }
  AsymptoticPrediction p{params, alpha, Regime::large_block, 0.0, 0.0, scriptL < 10.0};
  if (alpha == 1.0) {
    p.constant_used = upsilon1(config);
    p.value = std::log(scriptL) / 3.0 + p.constant_used;
  } else {
    p.constant_used = upsilon_alpha(alpha, config);
    p.value = (1.0 + 1.0 / alpha) / 6.0 * std::log(scriptL) + p.constant_used;
  }
  return p;
}

AsymptoticPrediction large_block_entropy(const ModelParams& params, double alpha) {
  return large_block_entropy(params, alpha, default_quadrature());
}

AsymptoticPrediction small_block_entropy(const ModelParams& params, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("small_block_entropy: alpha must be > 0");
  const double scriptL = params.script_length;
  if (!(scriptL > 0.0 && scriptL < 1.0)) {
    throw DomainError("small_block_entropy: valid for scaling variable in (0, 1), got " +
                      std::to_string(scriptL));
  }
  // One nontrivial mode: the block spectrum is {scriptL/pi - 1, -1, ..., -1},
  // so the whole family is the single-mode entropy at nu = scriptL/pi - 1.
  const double nu = scriptL / kPi - 1.0;
  AsymptoticPrediction p{params, alpha, Regime::small_block, 0.0,
                         std::numeric_limits<double>::quiet_NaN(), false};
  p.value = (alpha == 1.0) ? binary_entropy_term(1.0, nu) : renyi_mode_term(nu, alpha);
  return p;
}

}  // namespace xxent
