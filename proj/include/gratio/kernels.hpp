#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include "gratio/bernoulli.hpp"
#include "gratio/config.hpp"

// Hyperbolic kernels: the cosh/sinh ratios, their Clausen-type Fourier
// closed forms, and S_L(x,u) in both the hyperbolic and the sin-series
// representation.

namespace gratio {

inline constexpr int kKernelMaxL = 50;
inline constexpr double kKernelMaxU = 1e4;

struct KernelPoint {
  double x;
  double u;
  int L;
};

namespace detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline void check_kernel_args(double x, double u, int L) {
  if (!(u > 0)) throw std::domain_error("kernel: u must be positive");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("kernel: x must lie in [0, 1]");
  if (L < -1 || L > kKernelMaxL) throw std::domain_error("kernel: L must lie in [-1, 50]");
  if (u > kKernelMaxU) throw std::overflow_error("kernel: u exceeds the scaled-path range");
}

/// sin/cos of 2*pi*m*x for m = 1,2,3,... via rotation, resynced with an
/// exactly reduced argument (two-product split of m*x) to stop drift.
class SinCosSeq {
 public:
  explicit SinCosSeq(double x) : x_(x) {
    const double a = kTwoPi * x_;
    step_s_ = std::sin(a);
    step_c_ = std::cos(a);
    resync(1);
  }

  double sin() const { return s_; }
  double cos() const { return c_; }
  std::int64_t m() const { return m_; }

  void advance() {
    const double s = s_ * step_c_ + c_ * step_s_;
    const double c = c_ * step_c_ - s_ * step_s_;
    s_ = s;
    c_ = c;
    ++m_;
    if (m_ % 512 == 0) resync(m_);
  }

 private:
  void resync(std::int64_t m) {
    m_ = m;
    const double mm = static_cast<double>(m);
    const double hi = mm * x_;
    const double lo = std::fma(mm, x_, -hi);  // mm*x = hi + lo exactly
    const double frac = std::fmod(hi, 1.0) + lo;
    s_ = std::sin(kTwoPi * frac);
    c_ = std::cos(kTwoPi * frac);
  }

  double x_, step_s_, step_c_, s_, c_;
  std::int64_t m_ = 1;
};

/// (2*pi)^p / (2 * p!)
inline double two_pi_pow_over_two_fact(int p) {
  double r = 0.5;
  for (int i = 1; i <= p; ++i) r *= kTwoPi / i;
  return r;
}

}  // namespace detail

/// u*cosh[(x-1/2)u] / (2*sinh[u/2]), overflow-safe (only decaying exponentials).
inline double cosh_kernel(double x, double u) {
  detail::check_kernel_args(x, u, 0);
  return u * (std::exp((x - 1.0) * u) + std::exp(-x * u)) / (2.0 * (-std::expm1(-u)));
}

/// sinh[(x-1/2)u] / (2*sinh[u/2]).
inline double sinh_kernel(double x, double u) {
  detail::check_kernel_args(x, u, 0);
  return (std::exp((x - 1.0) * u) - std::exp(-x * u)) / (2.0 * (-std::expm1(-u)));
}

/// Closed form of sum_{m>=1} cos(2*pi*m*x)/m^{2l+2}.
inline double fourier_cos_sum(int l, double x) {
  if (l < 0 || l > 20) throw std::domain_error("fourier_cos_sum: l must lie in [0, 20]");
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("fourier_cos_sum: x must lie in [0, 1]");
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  return sign * bernoulli_poly_at(2 * l + 2, x) * detail::two_pi_pow_over_two_fact(2 * l + 2);
}

/// Closed form of sum_{m>=1} sin(2*pi*m*x)/m^{2l+1}, x strictly inside (0,1).
inline double fourier_sin_sum(int l, double x) {
  if (l < 0 || l > 20) throw std::domain_error("fourier_sin_sum: l must lie in [0, 20]");
  if (!(x > 0.0 && x < 1.0))
    throw std::domain_error("fourier_sin_sum: x must lie in the open interval (0, 1)");
  const double sign = (l % 2 == 1) ? 1.0 : -1.0;  // (-1)^{l-1}
  return sign * bernoulli_poly_at(2 * l + 1, x) * detail::two_pi_pow_over_two_fact(2 * l + 1);
}

namespace detail {

/// sum_{k=0..L} B_{2k+1}(x) u^{2k}/(2k+1)!  (empty for L = -1).
inline double odd_bernoulli_partial(double x, double u, int L) {
  double factor = 1.0;  // u^{2k}/(2k+1)!
  KahanSum acc;
  for (int k = 0; k <= L; ++k) {
    acc.add(bernoulli_poly_at(2 * k + 1, x) * factor);
    factor *= u * u / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return acc.sum;
}

/// S_L(x,u) as the convergent remainder (-1)^L sum_{k>L} B_{2k+1}(x) u^{2k}/(2k+1)!,
/// valid for u < 2*pi. No cancellation against the hyperbolic form.
inline double s_kernel_power_tail(double x, double u, int L) {
  const double u2 = u * u;
  double factor = 1.0;  // u^{2k}/(2k+1)! at current k
  for (int k = 0; k < L + 1; ++k) factor *= u2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  KahanSum acc;
  double scale = 0.0;
  for (int k = L + 1; 2 * k + 1 <= kBernoulliMaxIndex - 1; ++k) {
    const double term = bernoulli_poly_at(2 * k + 1, x) * factor;
    acc.add(term);
    scale = std::max(scale, std::abs(term));
    if (k > L + 2 && std::abs(term) < 1e-17 * (std::abs(acc.sum) + scale)) break;
    factor *= u2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  const double sign = (L % 2 == 0) ? 1.0 : -1.0;
  return sign * acc.sum;
}

// Below this the subtraction form of S_L loses digits (S_L = O(u^{2L+2})).
inline double s_kernel_crossover(int L) {
  return std::min(std::max(1.0, static_cast<double>(L)), 4.5);
}

}  // namespace detail

/// S_L(x,u) = (-1)^L ( sinh_kernel(x,u) - sum_{0<=k<=L} B_{2k+1}(x) u^{2k}/(2k+1)! ).
/// For small u the subtraction form is replaced by the series remainder.
inline double s_kernel(const KernelPoint& p) {
  detail::check_kernel_args(p.x, p.u, p.L);
  if (p.L >= 0 && p.u < detail::s_kernel_crossover(p.L))
    return detail::s_kernel_power_tail(p.x, p.u, p.L);
  const double sign = (p.L % 2 == 0) ? 1.0 : -1.0;
  return sign * (sinh_kernel(p.x, p.u) - detail::odd_bernoulli_partial(p.x, p.u, p.L));
}

/// Series form: S_L(x, 2*pi*v) = (v^{2L+2}/pi) sum_m sin(2*pi*m*x)/(m^{2L+1}(m^2+v^2)),
/// summed directly (pairwise for L = -1) with a tail bound in err.
inline ValueErr s_kernel_series_ve(const KernelPoint& p, std::int64_t terms) {
  detail::check_kernel_args(p.x, p.u, p.L);
  if (!(p.x > 0.0 && p.x < 1.0))
    throw std::domain_error("s_kernel_series: x must lie in the open interval (0, 1)");
  if (terms < 2) throw std::invalid_argument("s_kernel_series: terms must be >= 2");
  const std::int64_t cap = 100'000'000;
  if (terms > cap) terms = cap;

  const double v = p.u / detail::kTwoPi;
  const double v2 = v * v;
  // prefactor v^{2L+2}/pi via logs to dodge under/overflow at extreme L
  const double pf = std::exp((2.0 * p.L + 2.0) * std::log(v)) / std::numbers::pi;
  const int q = 2 * p.L + 1;  // power of m in the denominator

  auto weight = [&](double m) {
    double mp = 1.0;
    for (int i = 0; i < std::abs(q); ++i) mp *= m;
    const double denom = m * m + v2;
    return (q >= 0) ? 1.0 / (mp * denom) : mp / denom;
  };

  detail::SinCosSeq sc(p.x);
  detail::KahanSum acc;
  if (p.L == -1) {
    // conditionally convergent; accumulate in (m, m+1) pairs
    std::int64_t m = 1;
    while (m + 1 <= terms) {
      double pair = sc.sin() * weight(static_cast<double>(m));
      sc.advance();
      pair += sc.sin() * weight(static_cast<double>(m + 1));
      sc.advance();
      acc.add(pair);
      m += 2;
    }
    if (m <= terms) acc.add(sc.sin() * weight(static_cast<double>(m)));
  } else {
    for (std::int64_t m = 1; m <= terms; ++m) {
      acc.add(sc.sin() * weight(static_cast<double>(m)));
      sc.advance();
    }
  }

  // tail bound: Abel (bounded sin partial sums, decreasing weights for m > v),
  // and for L >= 0 also the absolute 1/m^{2L+3} bound
  const double mnext = static_cast<double>(terms) + 1.0;
  const double abel = (1.0 / std::abs(std::sin(std::numbers::pi * p.x)) + 1.0) * weight(mnext);
  double tail = abel;
  if (p.L >= 0) {
    const double absolute = 1.0 / ((2.0 * p.L + 2.0) * std::pow(mnext - 1.0, 2.0 * p.L + 2.0));
    tail = std::min(tail, absolute);
  }
  if (p.L == -1 && static_cast<double>(terms) <= v) tail = 1.0;  // weights not yet decreasing
  const double value = pf * acc.sum;
  return {value, pf * tail + 1e-16 * std::abs(value)};
}

inline double s_kernel_series(const KernelPoint& p, std::int64_t terms) {
  ValueErr r = s_kernel_series_ve(p, terms);
  if (p.L == -1 && r.err > 1e-6)
    throw std::runtime_error("s_kernel_series: L = -1 series converges too slowly for the "
                             "requested term budget");
  return r.value;
}

/// Direct partial summation of sum cos(2*pi*m*x)/m^{2l+2} with tail bound.
inline ValueErr direct_fourier_cos_sum(int l, double x, std::int64_t terms) {
  if (l < 0) throw std::domain_error("direct_fourier_cos_sum: l must be >= 0");
  const int q = 2 * l + 2;
  detail::SinCosSeq sc(x);
  detail::KahanSum acc;
  for (std::int64_t m = 1; m <= terms; ++m) {
    acc.add(sc.cos() / std::pow(static_cast<double>(m), q));
    sc.advance();
  }
  const double mnext = static_cast<double>(terms) + 1.0;
  const double sx = std::abs(std::sin(std::numbers::pi * x));
  double tail = 1.0 / ((q - 1.0) * std::pow(static_cast<double>(terms), q - 1.0));
  if (sx > 1e-6) tail = std::min(tail, (1.0 / sx + 1.0) / std::pow(mnext, q));
  return {acc.sum, tail + 1e-15};
}

/// Direct partial summation of sum sin(2*pi*m*x)/m^{2l+1} with tail bound.
inline ValueErr direct_fourier_sin_sum(int l, double x, std::int64_t terms) {
  if (l < 0) throw std::domain_error("direct_fourier_sin_sum: l must be >= 0");
  const int q = 2 * l + 1;
  detail::SinCosSeq sc(x);
  detail::KahanSum acc;
  for (std::int64_t m = 1; m <= terms; ++m) {
    acc.add(sc.sin() / std::pow(static_cast<double>(m), q));
    sc.advance();
  }
  const double mnext = static_cast<double>(terms) + 1.0;
  const double sx = std::abs(std::sin(std::numbers::pi * x));
  const double tail = (1.0 / std::max(sx, 1e-300) + 1.0) / std::pow(mnext, q);
  return {acc.sum, tail + 1e-15};
}

}  // namespace gratio
