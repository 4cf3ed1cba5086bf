#pragma once

#include "cyclo/polynomial.hpp"

#include <string>

namespace cyclo {

/// Reduced quotient num/den of rational polynomials in q:
/// den != 0, gcd(num, den) = 1 and den is monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Polynomial::constant(1)) {}
  explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }
  /// Skips the gcd; the caller guarantees num and den are coprime.
  static RationalFunction from_coprime(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  /// f(q^d)
  RationalFunction substitute_power(std::size_t d) const;
  /// Exact value at x; throws std::domain_error at a pole.
  Rational evaluate(const Rational& x) const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);
  RationalFunction& operator*=(const Rational& c);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  friend RationalFunction operator*(const Rational& c, RationalFunction a) { return a *= c; }
  RationalFunction operator-() const;

  bool operator==(const RationalFunction& other) const {
    return num_ == other.num_ && den_ == other.den_;
  }
  bool operator!=(const RationalFunction& other) const { return !(*this == other); }

  std::string to_string(std::string_view var = "q") const;

 private:
  struct Unchecked {};
  RationalFunction(Unchecked, Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

/// f^k for any integer k (k < 0 requires f != 0).
RationalFunction pow(const RationalFunction& f, Int k);

}  // namespace cyclo
