#pragma once

#include "cyclo/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

/// Dense univariate polynomial in q over the rationals.
/// Canonical form: no trailing zero coefficients; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// q^d - 1
  static Polynomial binomial(std::size_t d);
  static Polynomial from_ints(const std::vector<Int>& coefficients);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t lowest_degree() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  /// p(q^d)
  Polynomial substitute_power(std::size_t d) const;
  /// q^k p(q)
  Polynomial shifted(std::size_t k) const;
  /// p(q) / q^k; requires the low coefficients to vanish.
  Polynomial unshifted(std::size_t k) const;
  Rational evaluate(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Human-readable form in descending powers, e.g. "q^2 - q + 1".
  std::string to_string(std::string_view var = "q") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);

/// a / b; throws std::logic_error when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Divides `a` by `b` when the division is exact.
bool try_exact_divide(const Polynomial& a, const Polynomial& b, Polynomial& quotient);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, unsigned exp);

/// Res(a, b) = lc(a)^deg(b) * prod_{a(x)=0} b(x), over the rationals.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// Unique polynomial of degree < xs.size() through the given points.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace cyclo
