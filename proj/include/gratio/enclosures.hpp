#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "gratio/bernoulli.hpp"
#include "gratio/config.hpp"
#include "gratio/gammaref.hpp"
#include "gratio/kernels.hpp"
#include "gratio/quadrature.hpp"
#include "gratio/report.hpp"

// G_m / H_m residuals, their truncated asymptotic series, the two-sided
// enclosures, the integral representations, the legacy specializations
// and the classical product inequalities.

namespace gratio {

enum class RatioKind { kG, kH };

namespace detail {
inline void check_series_args(int m, double x, double t) {
  if (m < 0) throw std::domain_error("series: m must be nonnegative");
  if (!(x >= 0.0 && x <= 0.5)) throw std::domain_error("series: x must lie in [0, 1/2]");
  if (!(t > 0)) throw std::domain_error("series: t must be positive");
}
}  // namespace detail

/// sum_{l=1..m} (B_{2l}(x) - B_{2l}) / (l(2l-1)) * t^{-(2l-1)}; empty sum for m = 0.
inline double series_G(int m, double x, double t) {
  detail::check_series_args(m, x, t);
  const double tau = 1.0 / t, tau2 = tau * tau;
  double acc = 0.0;
  for (int l = m; l >= 1; --l) {
    const double c = (bernoulli_poly_at(2 * l, x) - to_double(bernoulli_number(2 * l))) /
                     (l * (2.0 * l - 1.0));
    acc = acc * tau2 + c;
  }
  return acc * tau;
}

/// sum_{l=1..m} B_{2l+1}(x) / (l(2l+1)) * t^{-2l}; empty sum for m = 0.
inline double series_H(int m, double x, double t) {
  detail::check_series_args(m, x, t);
  const double tau2 = 1.0 / (t * t);
  double acc = 0.0;
  for (int l = m; l >= 1; --l) {
    const double c = bernoulli_poly_at(2 * l + 1, x) / (l * (2.0 * l + 1.0));
    acc = acc * tau2 + c;
  }
  return acc * tau2;
}

/// G_m(x,t) = (-1)^{m-1} (log gamma_ratio_G - series_G).
inline ValueErr residual_G(int m, double x, double t, const EvalConfig& cfg = {}) {
  detail::check_series_args(m, x, t);
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;
  const ValueErr lr = log_gamma_ratio_G(x, t, cfg);
  const double s = series_G(m, x, t);
  return {sign * (lr.value - s), lr.err + 2e-16 * std::abs(s)};
}

/// H_m(x,t) = (-1)^m (log gamma_ratio_H - series_H).
inline ValueErr residual_H(int m, double x, double t, const EvalConfig& cfg = {}) {
  detail::check_series_args(m, x, t);
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const ValueErr lr = log_gamma_ratio_H(x, t, cfg);
  const double s = series_H(m, x, t);
  return {sign * (lr.value - s), lr.err + 2e-16 * std::abs(s)};
}

struct Enclosure {
  double lower;
  double upper;
  double width() const { return upper - lower; }
};

/// Two-sided enclosure of the gamma ratio from truncated series of opposite
/// parity. Strict containment holds for x in the open interval (0, 1/2).
inline Enclosure enclose(RatioKind kind, double x, double t, int m1, int m2) {
  if (!(x > 0.0 && x < 0.5))
    throw std::domain_error("enclose: x must lie in open interval (0, 1/2)");
  if (!(t > 0)) throw std::domain_error("enclose: t must be positive");
  if (m1 < 0 || m2 < 0) throw std::domain_error("enclose: m1, m2 must be nonnegative");
  double slo, shi;
  if (kind == RatioKind::kG) {
    slo = series_G(2 * m1 + 1, x, t);
    shi = series_G(2 * m2, x, t);
  } else {
    slo = series_H(2 * m1, x, t);
    shi = series_H(2 * m2 + 1, x, t);
  }
  // At large t opposite-parity truncations agree to sub-ulp width and
  // roundoff can flip their order; collapse those to a degenerate interval.
  if (slo > shi) {
    if (slo - shi > 1e-13 * (1.0 + std::abs(slo)))
      throw std::runtime_error("enclose: inverted enclosure (orders too high for this t)");
    slo = shi = 0.5 * (slo + shi);
  }
  Enclosure e{std::exp(slo), std::exp(shi)};
  if (!(e.lower <= e.upper))
    throw std::runtime_error("enclose: inverted enclosure (orders too high for this t)");
  return e;
}

namespace detail {

/// int_U^inf u^p e^{-ut} du for integer p >= 0 (closed form via the
/// incomplete-gamma finite sum; safe fallback for very large U*t).
inline double exp_tail_integral(int p, double U, double t) {
  const double Ut = U * t;
  if (Ut > 700.0) {
    double lf = 0.0;
    for (int i = 2; i <= p; ++i) lf += std::log(static_cast<double>(i));
    return std::exp(-0.5 * Ut + lf + (p + 1) * std::log(2.0 / t));
  }
  double sum = 1.0, term = 1.0;
  for (int j = 1; j <= p; ++j) {
    term *= Ut / j;
    sum += term;
  }
  double fact = 1.0;
  for (int i = 2; i <= p; ++i) fact *= i;
  return fact / std::pow(t, p + 1) * std::exp(-Ut) * sum;
}

/// Bound on int_U^inf |S_s(x,u)| u^{upow} e^{-ut} du, uniform in x in [0,1],
/// from |S_s| <= 1/2 + sum_{k<=s} max|B_{2k+1}| u^{2k}/(2k+1)!.
/// upow = -1 uses u^{-1} <= 1/U.
inline double s_tail_bound(int s_index, int upow, double U, double t) {
  auto tail_pow = [&](int p) {
    return p >= 0 ? exp_tail_integral(p, U, t) : exp_tail_integral(0, U, t) / U;
  };
  double bound = 0.5 * tail_pow(upow);
  double invfact = 1.0;  // 1/(2k+1)!
  for (int k = 0; k <= s_index; ++k) {
    if (k > 0) invfact /= (2.0 * k) * (2.0 * k + 1.0);
    double poly_max = 0.0;  // sum of |coeffs| bounds |B_{2k+1}| on [0,1]
    for (double c : bernoulli_polynomial(2 * k + 1).coeffs_d()) poly_max += std::abs(c);
    bound += poly_max * invfact * tail_pow(2 * k + upow);
  }
  return bound;
}

inline double pow_int(double u, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= u;
  return r;
}

/// 2 int_0^inf S_{s}(x,u) u^{upow} e^{-ut} du (upow >= -1; S_s/u -> 0 at 0 for s >= 0).
inline ValueErr laplace_s_integral(int s_index, double x, double t, int upow,
                                   const EvalConfig& cfg) {
  cfg.validate();
  if (!(t > 0)) throw std::domain_error("integral: t must be positive");
  double U = std::max(cfg.quad_cutoff / t, cfg.quad_cutoff);
  double tail = s_tail_bound(s_index, upow, U, t);
  while (tail > cfg.abs_tol / 10.0) {
    U *= 1.5;
    if (U * t > 1e7) throw std::runtime_error("integral: analytic tail bound did not converge");
    tail = s_tail_bound(s_index, upow, U, t);
  }
  auto f = [&](double u) {
    if (!(u > 0)) return 0.0;
    const double s = s_kernel({x, u, s_index});
    const double w = (upow == -1) ? s / u : s * pow_int(u, upow);
    return w * std::exp(-u * t);
  };
  ValueErr I = integrate_adaptive(f, 0.0, U, cfg.abs_tol, cfg.rel_tol, cfg.quad_points);
  return {2.0 * I.value, 2.0 * (I.err + tail)};
}

/// 2 int_0^x int_0^inf S_{m-1}(y,u) u^{upow} e^{-ut} du dy.
/// Note: the m = 0 case uses S_{-1}; there is no extra Kronecker term
/// (G_m(x,t) = 2*int*int exactly, for every m >= 0).
inline ValueErr nested_s_integral(int m, double x, double t, int upow, const EvalConfig& cfg) {
  cfg.validate();
  if (x == 0.0) return {0.0, 0.0};
  double max_inner_err = 0.0;
  auto inner = [&](double y) {
    ValueErr v = laplace_s_integral(m - 1, y, t, upow, cfg);
    max_inner_err = std::max(max_inner_err, v.err);
    return 0.5 * v.value;  // the factor 2 is applied once at the end
  };
  ValueErr outer =
      integrate_adaptive(inner, 0.0, x, cfg.abs_tol, cfg.rel_tol, cfg.quad_points, 1 << 8);
  return {2.0 * outer.value, 2.0 * outer.err + x * max_inner_err};
}

}  // namespace detail

/// H_m(x,t) = 2 int_0^inf (S_m(x,u)/u) e^{-ut} du.
inline ValueErr integral_H(int m, double x, double t, const EvalConfig& cfg = {}) {
  detail::check_series_args(m, x, t);
  return detail::laplace_s_integral(m, x, t, -1, cfg);
}

/// G_m(x,t) = 2 int_0^x int_0^inf S_{m-1}(y,u) e^{-ut} du dy.
inline ValueErr integral_G(int m, double x, double t, const EvalConfig& cfg = {}) {
  detail::check_series_args(m, x, t);
  return detail::nested_s_integral(m, x, t, 0, cfg);
}

enum class LegacyFn { kF, kU, kV, kMu, kNu };

/// Prior-work specializations: F_m = G_m(1/2,t)/2, U_m = H_m(1/3,t),
/// V_m = H_m(1/4,t), mu_m = 2 S_m(1/3,t), nu_m = 2 S_m(1/4,t).
inline double legacy(LegacyFn fn, int m, double t, const EvalConfig& cfg = {}) {
  switch (fn) {
    case LegacyFn::kF: return residual_G(m, 0.5, t, cfg).value / 2.0;
    case LegacyFn::kU: return residual_H(m, 1.0 / 3.0, t, cfg).value;
    case LegacyFn::kV: return residual_H(m, 0.25, t, cfg).value;
    case LegacyFn::kMu: return 2.0 * s_kernel({1.0 / 3.0, t, m});
    case LegacyFn::kNu: return 2.0 * s_kernel({0.25, t, m});
  }
  throw std::logic_error("legacy: unknown function");
}

enum class InequalityFamily { kHalf, kThird, kTwoThirds };

inline const char* to_string(InequalityFamily f) {
  switch (f) {
    case InequalityFamily::kHalf: return "HALF";
    case InequalityFamily::kThird: return "THIRD";
    default: return "TWO_THIRDS";
  }
}

/// Verifies the displayed product sandwiches for n = 1..n_max.
inline GridReport classical_inequality_check(InequalityFamily family, long long n_max,
                                             const EvalConfig& cfg = {}) {
  if (n_max < 1) throw std::domain_error("classical_inequality_check: n_max must be >= 1");
  const double pi = std::numbers::pi;
  const double gamma23 = std::exp(log_gamma(2.0 / 3.0, cfg));

  double a = 0.0;  // product is prod (k - a)/k
  switch (family) {
    case InequalityFamily::kHalf: a = 0.5; break;
    case InequalityFamily::kThird: a = 1.0 / 3.0; break;
    case InequalityFamily::kTwoThirds: a = 2.0 / 3.0; break;
  }

  GridReport report;
  report.rows.reserve(static_cast<std::size_t>(n_max));
  double product = 1.0;
  for (long long n = 1; n <= n_max; ++n) {
    product *= (static_cast<double>(n) - a) / static_cast<double>(n);
    double lo = 0.0, hi = 0.0;
    const double nd = static_cast<double>(n);
    switch (family) {
      case InequalityFamily::kHalf:
        lo = 1.0 / std::sqrt(pi * nd + 4.0 - pi);
        hi = 1.0 / std::sqrt(pi * nd + pi / 4.0);
        break;
      case InequalityFamily::kThird:
        lo = (2.0 / 3.0) / std::cbrt(nd);
        hi = (1.0 / gamma23) / std::cbrt(nd);
        break;
      case InequalityFamily::kTwoThirds:
        lo = (1.0 / 3.0) / std::cbrt(nd * nd);
        hi = (std::sqrt(3.0) * gamma23 / (2.0 * pi)) / std::cbrt(nd * nd);
        break;
    }
    GridRow row;
    row.label = to_string(family);
    row.n = n;
    row.lower = lo;
    row.value = product;
    row.upper = hi;
    row.margin_low = product - lo;
    row.margin_high = hi - product;
    const double slack = 1e-14 + 1e-12 * product;
    row.status = (row.margin_low >= -slack && row.margin_high >= -slack) ? RowStatus::kPass
                                                                         : RowStatus::kFail;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace gratio
