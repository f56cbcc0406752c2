#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gratio {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational arithmetic. cpp_rational keeps gcd(num, den) = 1 and
// den > 0 after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// Dense polynomial over Rational; coeffs_[k] is the coefficient of x^k.
/// The zero polynomial has an empty coefficient vector.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const Rational& coeff(std::size_t k) const {
    static const Rational zero{};
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const std::vector<double>& coeffs_d() const { return dcoeffs_; }

  Rational eval_exact(const Rational& x) const {
    Rational acc{};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// Horner evaluation on pre-converted double coefficients.
  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = dcoeffs_.size(); i-- > 0;) acc = acc * x + dcoeffs_[i];
    return acc;
  }

  RationalPolynomial derivative() const {
    if (coeffs_.size() <= 1) return RationalPolynomial{};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(k) * coeffs_[k];
    return RationalPolynomial(std::move(d));
  }

  /// p(a + b*x), exact.
  RationalPolynomial compose_affine(const Rational& a, const Rational& b) const {
    std::vector<Rational> acc;  // result, built by Horner
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      // acc = acc*(a + b*x) + c_i
      std::vector<Rational> next(acc.size() + 1);
      for (std::size_t k = 0; k < acc.size(); ++k) {
        next[k] += a * acc[k];
        next[k + 1] += b * acc[k];
      }
      if (next.empty()) next.resize(1);
      next[0] += coeffs_[i];
      acc = std::move(next);
    }
    return RationalPolynomial(std::move(acc));
  }

  RationalPolynomial operator+(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) + o.coeff(k);
    return RationalPolynomial(std::move(c));
  }
  RationalPolynomial operator-(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coeff(k) - o.coeff(k);
    return RationalPolynomial(std::move(c));
  }
  RationalPolynomial operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_);
    for (auto& ck : c) ck *= s;
    return RationalPolynomial(std::move(c));
  }

  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    dcoeffs_.resize(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) dcoeffs_[k] = to_double(coeffs_[k]);
  }

  std::vector<Rational> coeffs_;
  std::vector<double> dcoeffs_;
};

}  // namespace gratio
