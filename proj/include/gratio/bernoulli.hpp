#pragma once

#include <deque>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gratio/rational.hpp"

namespace gratio {

// Coefficient bit-size grows fast with the index; nothing here needs more.
inline constexpr int kBernoulliMaxIndex = 200;

namespace detail {

struct BernoulliTables {
  std::mutex mu;
  std::vector<Rational> numbers;        // B_0..B_n, stable (reserved up front)
  std::deque<RationalPolynomial> polys; // B_0(x)..B_n(x), deque keeps references stable
  BernoulliTables() { numbers.reserve(kBernoulliMaxIndex + 1); }
};

inline BernoulliTables& bernoulli_tables() {
  static BernoulliTables t;
  return t;
}

inline void check_bernoulli_index(int n) {
  if (n < 0) throw std::domain_error("bernoulli: index must be nonnegative");
  if (n > kBernoulliMaxIndex)
    throw std::domain_error("bernoulli: index exceeds table cap of " +
                            std::to_string(kBernoulliMaxIndex));
}

// Extends the number table to index n. Caller holds the lock.
inline void extend_numbers(BernoulliTables& t, int n) {
  if (t.numbers.empty()) t.numbers.emplace_back(1);
  for (int m = static_cast<int>(t.numbers.size()); m <= n; ++m) {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k
    Rational acc{};
    BigInt binom = 1;  // C(m+1, 0)
    for (int k = 0; k < m; ++k) {
      acc += Rational(binom) * t.numbers[k];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    t.numbers.push_back(-acc / Rational(m + 1));
  }
}

}  // namespace detail

/// Exact Bernoulli number B_n = B_n(0); memoized.
inline const Rational& bernoulli_number(int n) {
  detail::check_bernoulli_index(n);
  auto& t = detail::bernoulli_tables();
  std::scoped_lock lock(t.mu);
  detail::extend_numbers(t, n);
  return t.numbers[static_cast<std::size_t>(n)];
}

/// Exact Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}; memoized.
inline const RationalPolynomial& bernoulli_polynomial(int n) {
  detail::check_bernoulli_index(n);
  auto& t = detail::bernoulli_tables();
  std::scoped_lock lock(t.mu);
  detail::extend_numbers(t, n);
  for (int m = static_cast<int>(t.polys.size()); m <= n; ++m) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(m) + 1);
    BigInt binom = 1;  // C(m, 0)
    for (int k = 0; k <= m; ++k) {
      coeffs[static_cast<std::size_t>(m - k)] = Rational(binom) * t.numbers[k];
      if (k < m) binom = binom * (m - k) / (k + 1);
    }
    t.polys.emplace_back(std::move(coeffs));
  }
  return t.polys[static_cast<std::size_t>(n)];
}

inline double eval_poly(const RationalPolynomial& p, double x) { return p.eval(x); }

inline Rational eval_poly_exact(const RationalPolynomial& p, const Rational& x) {
  return p.eval_exact(x);
}

/// B_n(x) at a double argument, going through the memoized exact polynomial.
/// Odd-index polynomials vanish identically at 0, 1/2 and 1 (n >= 3, plus
/// B_1(1/2) = 0); Horner in double leaves a residue there, so return the
/// exact zero directly.
inline double bernoulli_poly_at(int n, double x) {
  if (n % 2 == 1 && (x == 0.5 || (n >= 3 && (x == 0.0 || x == 1.0)))) return 0.0;
  return bernoulli_polynomial(n).eval(x);
}

}  // namespace gratio
