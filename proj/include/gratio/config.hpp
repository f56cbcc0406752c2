#pragma once

#include <cstdint>
#include <stdexcept>

namespace gratio {

/// Value with an accompanying absolute error estimate.
struct ValueErr {
  double value = 0.0;
  double err = 0.0;
};

struct EvalConfig {
  std::int64_t product_terms = 0;           // Euler-product truncation; 0 = adaptive
  std::int64_t product_terms_cap = 10'000'000;
  std::int64_t series_terms = 0;            // digamma series truncation; 0 = adaptive
  int quad_points = 16;                     // Gauss-Legendre nodes per panel
  double quad_cutoff = 40.0;                // U in the [0,U] + tail split
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;

  void validate() const {
    if (product_terms < 0 || series_terms < 0 || product_terms_cap < 1)
      throw std::invalid_argument("EvalConfig: term counts must be >= 1 (or 0 for adaptive)");
    if (quad_points < 2) throw std::invalid_argument("EvalConfig: quad_points must be >= 2");
    if (!(quad_cutoff > 0)) throw std::invalid_argument("EvalConfig: quad_cutoff must be > 0");
    if (!(abs_tol > 0) || !(rel_tol > 0))
      throw std::invalid_argument("EvalConfig: tolerances must be > 0");
  }
};

namespace detail {

/// Kahan-compensated accumulator.
struct KahanSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    double y = x - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace detail

}  // namespace gratio
