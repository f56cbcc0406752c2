#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gratio/enclosures.hpp"
#include "gratio/report.hpp"

// Numerical complete-monotonicity checks: alternating forward differences
// of the residuals, and the derivative integrals from the kernel
// representation (the authoritative route).

namespace gratio {

inline constexpr int kCmMaxOrder = 12;  // difference noise beyond is meaningless in double

struct CMReport {
  std::string function_id;
  std::vector<double> t_grid;
  int k_max = 0;
  double h = 0.0;
  double worst_violation = 0.0;  // most negative normalized difference observed
  std::string verdict;           // pass / fail / indeterminate
  GridReport rows;
};

/// Checks (-1)^k Delta_h^k f(t) / h^k >= -eps_noise for k = 0..k_max on the
/// grid, eps_noise = f_abs_err * 2^k / h^k. Points whose value sits inside
/// the noise band are reported indeterminate, never silently passed.
inline CMReport cm_finite_difference(const std::function<double(double)>& f, double f_abs_err,
                                     const std::vector<double>& t_grid, int k_max, double h,
                                     const std::string& function_id = "f") {
  if (!(h > 0)) throw std::invalid_argument("cm_finite_difference: h must be positive");
  if (k_max < 0 || k_max > kCmMaxOrder)
    throw std::invalid_argument("cm_finite_difference: k_max must lie in [0, 12]");
  if (t_grid.empty()) throw std::invalid_argument("cm_finite_difference: empty grid");
  for (double t : t_grid)
    if (!(t > k_max * h))
      throw std::invalid_argument("cm_finite_difference: grid point too close to 0 for k_max*h");

  CMReport report;
  report.function_id = function_id;
  report.t_grid = t_grid;
  report.k_max = k_max;
  report.h = h;

  bool any_fail = false, any_indet = false;
  for (double t : t_grid) {
    // f(t), f(t+h), ..., f(t+k_max*h); difference table in place
    std::vector<double> d(static_cast<std::size_t>(k_max) + 1);
    for (int j = 0; j <= k_max; ++j) d[static_cast<std::size_t>(j)] = f(t + j * h);
    double hk = 1.0;
    double noise_scale = f_abs_err;
    for (int k = 0; k <= k_max; ++k) {
      // d[0] currently holds Delta^k f(t)
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      const double value = sign * d[0] / hk;
      const double noise = noise_scale / hk;
      GridRow row;
      row.label = function_id;
      row.t = t;
      row.k = k;
      row.h = h;
      row.value = value;
      row.noise_band = noise;
      row.margin_low = value + noise;
      if (value > noise)
        row.status = RowStatus::kPass;
      else if (value < -noise) {
        row.status = RowStatus::kFail;
        any_fail = true;
      } else {
        row.status = RowStatus::kIndeterminate;
        any_indet = true;
      }
      report.worst_violation = std::min(report.worst_violation, value);
      report.rows.rows.push_back(std::move(row));
      if (k < k_max) {
        for (int j = 0; j <= k_max - k - 1; ++j)
          d[static_cast<std::size_t>(j)] =
              d[static_cast<std::size_t>(j) + 1] - d[static_cast<std::size_t>(j)];
        hk *= h;
        noise_scale *= 2.0;
      }
    }
  }
  report.verdict = any_fail ? "fail" : (any_indet ? "indeterminate" : "pass");
  return report;
}

/// Step-size policy for the difference route.
inline double cm_step(double t) { return std::max(1e-2, t / 100.0); }

/// (-1)^k d^k/dt^k of the residual via its integral form:
///   H: 2 int_0^inf S_m(x,u) u^{k-1} e^{-ut} du
///   G: 2 int_0^x int_0^inf S_{m-1}(y,u) u^k e^{-ut} du dy
/// Nonnegative for every k (complete monotonicity).
inline ValueErr cm_derivative_integral(RatioKind kind, int m, double x, double t, int k,
                                       const EvalConfig& cfg = {}) {
  detail::check_series_args(m, x, t);
  if (k < 0) throw std::domain_error("cm_derivative_integral: k must be nonnegative");
  if (kind == RatioKind::kH) return detail::laplace_s_integral(m, x, t, k - 1, cfg);
  return detail::nested_s_integral(m, x, t, k, cfg);
}

}  // namespace gratio
