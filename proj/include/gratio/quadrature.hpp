#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gratio/config.hpp"

namespace gratio {

namespace detail {

/// Gauss-Legendre nodes/weights on [-1,1], Newton on the recurrence.
inline std::vector<std::pair<double, double>> make_gl_rule(int n) {
  std::vector<std::pair<double, double>> rule(static_cast<std::size_t>(n));
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule[static_cast<std::size_t>(i)] = {-x, w};
    rule[static_cast<std::size_t>(n - 1 - i)] = {x, w};
  }
  return rule;
}

inline const std::vector<std::pair<double, double>>& gl_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_gl_rule(n)).first;
  return it->second;
}

}  // namespace detail

/// Composite Gauss-Legendre on [a,b]; panel count doubles until two
/// refinements agree to tolerance. err is the last refinement difference.
template <class F>
ValueErr integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                            int order = 16, int max_panels = 1 << 15) {
  if (!(b > a)) return {0.0, 0.0};
  const auto& rule = detail::gl_rule(order);
  auto composite = [&](int panels) {
    detail::KahanSum s;
    const double w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * w;
      const double mid = lo + 0.5 * w, half = 0.5 * w;
      for (const auto& [xi, wi] : rule) s.add(wi * half * f(mid + half * xi));
    }
    return s.sum;
  };
  double prev = composite(1);
  for (int panels = 2;; panels *= 2) {
    const double cur = composite(panels);
    const double diff = std::abs(cur - prev);
    if (diff < std::max(abs_tol, rel_tol * std::abs(cur)))
      return {cur, diff + 1e-16 * std::abs(cur)};
    if (panels >= max_panels)
      throw std::runtime_error("integrate_adaptive: quadrature did not converge");
    prev = cur;
  }
}

}  // namespace gratio
