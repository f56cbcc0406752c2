#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "gratio/config.hpp"

// Reference evaluator for log Gamma, digamma and the two gamma ratios,
// built directly on Euler's infinite product
//   Gamma(1+x) = prod_k (1+x/k)^{-1} (1+1/k)^x,
// with Gamma(z) = Gamma(1+z)/z. Slowly convergent, so the partial product
// is closed with an analytic 1/N tail expansion and the truncation is
// doubled until the value stabilizes.

namespace gratio {

namespace detail {

// Tail of sum_{k>N} [x log(1+1/k) - log(1+x/k)], expanded in 1/k and summed
// with zeta-tail asymptotics. Error after this correction is O(x^5/N^4).
inline double euler_product_tail(double x, double n) {
  const double n2 = n * n, n3 = n2 * n;
  const double t2 = 1.0 / n - 1.0 / (2.0 * n2) + 1.0 / (6.0 * n3);  // sum_{k>N} 1/k^2
  const double t3 = 1.0 / (2.0 * n2) - 1.0 / (2.0 * n3);            // sum_{k>N} 1/k^3
  const double t4 = 1.0 / (3.0 * n3);                               // sum_{k>N} 1/k^4
  const double c2 = (x * x - x) / 2.0;
  const double c3 = (x - x * x * x) / 3.0;
  const double c4 = (x * x * x * x - x) / 4.0;
  return c2 * t2 + c3 * t3 + c4 * t4;
}

/// log Gamma(1+x) from the Euler product truncated at N terms, tail-corrected.
/// The x*log(1+1/k) factors telescope to x*log(N+1).
inline double log_gamma1p_fixed(double x, std::int64_t n_terms) {
  KahanSum s;
  for (std::int64_t k = 1; k <= n_terms; ++k) s.add(std::log1p(x / static_cast<double>(k)));
  return x * std::log(static_cast<double>(n_terms) + 1.0) - s.sum +
         euler_product_tail(x, static_cast<double>(n_terms));
}

inline ValueErr log_gamma1p(double x, const EvalConfig& cfg) {
  if (cfg.product_terms > 0) {
    const double v = log_gamma1p_fixed(x, cfg.product_terms);
    const double vh = log_gamma1p_fixed(x, cfg.product_terms / 2 + 1);
    return {v, std::abs(v - vh) + 4e-16 * (1.0 + std::abs(v))};
  }
  std::int64_t n = 1 << 14;
  KahanSum s;
  std::int64_t done = 0;
  double prev = 0.0;
  bool have_prev = false;
  while (true) {
    for (std::int64_t k = done + 1; k <= n; ++k) s.add(std::log1p(x / static_cast<double>(k)));
    done = n;
    const double v = x * std::log(static_cast<double>(n) + 1.0) - s.sum +
                     euler_product_tail(x, static_cast<double>(n));
    if (have_prev && std::abs(v - prev) < cfg.abs_tol)
      return {v, std::abs(v - prev) + 4e-16 * (1.0 + std::abs(v))};
    if (n >= cfg.product_terms_cap)
      throw std::runtime_error("log_gamma: truncation error did not reach abs_tol within cap");
    prev = v;
    have_prev = true;
    n *= 2;
  }
}

}  // namespace detail

inline ValueErr log_gamma_ve(double z, const EvalConfig& cfg = {}) {
  if (!(z > 0)) throw std::domain_error("log_gamma: argument must be positive");
  // log Gamma(z) = log Gamma(1+z) - log z, one functional-equation shift.
  ValueErr g = detail::log_gamma1p(z, cfg);
  return {g.value - std::log(z), g.err};
}

inline double log_gamma(double z, const EvalConfig& cfg = {}) { return log_gamma_ve(z, cfg).value; }

namespace detail {

/// -psi(z) partial sum: sum_{n=0}^{N-1} 1/(n+z) - log(N+1), plus analytic tail.
inline double neg_digamma_fixed(double z, std::int64_t n_terms) {
  KahanSum s;
  for (std::int64_t n = 0; n < n_terms; ++n) s.add(1.0 / (static_cast<double>(n) + z));
  const double nn = static_cast<double>(n_terms);
  const double n2 = nn * nn, n3 = n2 * nn;
  const double t2 = 1.0 / nn - 1.0 / (2.0 * n2) + 1.0 / (6.0 * n3);
  const double t3 = 1.0 / (2.0 * n2) - 1.0 / (2.0 * n3);
  const double d = z - 1.0;
  const double tail = (0.5 - d) * t2 + (d * d - 1.0 / 3.0) * t3;
  return s.sum - std::log(nn + 1.0) + tail;
}

}  // namespace detail

inline ValueErr digamma_ve(double z, const EvalConfig& cfg = {}) {
  if (!(z > 0)) throw std::domain_error("digamma: argument must be positive");
  if (cfg.series_terms > 0) {
    const double v = -detail::neg_digamma_fixed(z, cfg.series_terms);
    const double vh = -detail::neg_digamma_fixed(z, cfg.series_terms / 2 + 1);
    return {v, std::abs(v - vh) + 4e-16 * (1.0 + std::abs(v))};
  }
  std::int64_t n = 1 << 14;
  double prev = 0.0;
  bool have_prev = false;
  while (true) {
    const double v = -detail::neg_digamma_fixed(z, n);
    if (have_prev && std::abs(v - prev) < cfg.abs_tol)
      return {v, std::abs(v - prev) + 4e-16 * (1.0 + std::abs(v))};
    if (n >= cfg.product_terms_cap)
      throw std::runtime_error("digamma: truncation error did not reach abs_tol within cap");
    prev = v;
    have_prev = true;
    n *= 2;
  }
}

inline double digamma(double z, const EvalConfig& cfg = {}) { return digamma_ve(z, cfg).value; }

namespace detail {
inline void check_ratio_args(double x, double t) {
  if (!(x >= 0.0 && x <= 0.5)) throw std::domain_error("gamma ratio: x must lie in [0, 1/2]");
  if (!(t > 0)) throw std::domain_error("gamma ratio: t must be positive");
}
}  // namespace detail

/// log of Gamma(t+1-x)Gamma(t+x) / (Gamma(t)Gamma(t+1)).
inline ValueErr log_gamma_ratio_G(double x, double t, const EvalConfig& cfg = {}) {
  detail::check_ratio_args(x, t);
  ValueErr a = log_gamma_ve(t + 1.0 - x, cfg);
  ValueErr b = log_gamma_ve(t + x, cfg);
  ValueErr c = log_gamma_ve(t, cfg);
  ValueErr d = log_gamma_ve(t + 1.0, cfg);
  return {a.value + b.value - c.value - d.value, a.err + b.err + c.err + d.err};
}

/// log of Gamma(t+1-x) / (t^{1-2x} Gamma(t+x)).
inline ValueErr log_gamma_ratio_H(double x, double t, const EvalConfig& cfg = {}) {
  detail::check_ratio_args(x, t);
  ValueErr a = log_gamma_ve(t + 1.0 - x, cfg);
  ValueErr b = log_gamma_ve(t + x, cfg);
  return {a.value - b.value - (1.0 - 2.0 * x) * std::log(t), a.err + b.err};
}

inline double gamma_ratio_G(double x, double t, const EvalConfig& cfg = {}) {
  return std::exp(log_gamma_ratio_G(x, t, cfg).value);
}

inline double gamma_ratio_H(double x, double t, const EvalConfig& cfg = {}) {
  return std::exp(log_gamma_ratio_H(x, t, cfg).value);
}

/// prod_{k=1..n} (k - 1/2)/k.
inline double half_integer_product(std::int64_t n) {
  if (n < 1) throw std::domain_error("half_integer_product: n must be >= 1");
  double p = 1.0;
  for (std::int64_t k = 1; k <= n; ++k)
    p *= (static_cast<double>(k) - 0.5) / static_cast<double>(k);
  return p;
}

}  // namespace gratio
