#pragma once

#include "cyclo/rational_function.hpp"

#include <string>
#include <vector>

namespace cyclo {

/// Truncated power series c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N).
/// Binary operations on series of different orders truncate to the smaller one.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::size_t order) : coeffs_(order) {}
  PowerSeries(std::vector<Rational> coefficients, std::size_t order);

  static PowerSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  bool is_zero() const;

  PowerSeries truncated(std::size_t order) const;
  /// f(q^d) to the same order.
  PowerSeries substitute_power(std::size_t d) const;
  /// q f'(q)
  PowerSeries q_derivative() const;
  /// 1/f; requires a nonzero constant term.
  PowerSeries inverse() const;
  /// q f'/f; requires a nonzero constant term.
  PowerSeries log_derivative() const;

  PowerSeries& operator+=(const PowerSeries& other);
  PowerSeries& operator-=(const PowerSeries& other);
  PowerSeries& operator*=(const Rational& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
  friend PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
  PowerSeries operator-() const;

  bool operator==(const PowerSeries& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const PowerSeries& other) const { return !(*this == other); }

  /// Index of the first differing coefficient over the common order, or -1.
  long first_difference(const PowerSeries& other) const;

  std::string to_string(std::size_t max_terms = 12) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Maclaurin expansion of f to `order` terms; f's denominator must not vanish at 0.
PowerSeries expand(const RationalFunction& f, std::size_t order);

}  // namespace cyclo
