#include "cyclo/rational_function.hpp"

#include <stdexcept>

namespace cyclo {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

RationalFunction RationalFunction::from_coprime(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  if (num.is_zero()) den = Polynomial::constant(1);
  return RationalFunction(Unchecked{}, std::move(num), std::move(den));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial q;
    if (try_exact_divide(num_, den_, q)) {
      num_ = std::move(q);
      den_ = Polynomial::constant(1);
    } else {
      Polynomial g = gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
      }
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::substitute_power(std::size_t d) const {
  // Coprimality survives q -> q^d: a common root r of num(q^d), den(q^d)
  // would make r^d a common root of num and den.
  return RationalFunction(Unchecked{}, num_.substitute_power(d), den_.substitute_power(d));
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole q=" + x.get_str());
  return num_.evaluate(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Polynomial::constant(1);
    return *this;
  }
  Polynomial g = gcd(den_, other.den_);
  if (g.is_constant()) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    if (num_.is_zero()) den_ = Polynomial::constant(1);
    return *this;
  }
  const Polynomial mine = exact_divide(den_, g);
  const Polynomial theirs = exact_divide(other.den_, g);
  num_ = num_ * theirs + other.num_ * mine;
  den_ = den_ * theirs;
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return *this;
  }
  // Any common factor of the new numerator and the lcm divides g.
  Polynomial h = gcd(num_, g);
  if (!h.is_constant()) {
    num_ = exact_divide(num_, h);
    den_ = exact_divide(den_, h);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero() || other.is_zero()) return *this = RationalFunction();
  Polynomial n1 = num_, d1 = den_;
  Polynomial n2 = other.num_, d2 = other.den_;
  if (!d2.is_constant()) {
    Polynomial g = gcd(n1, d2);
    if (!g.is_constant()) {
      n1 = exact_divide(n1, g);
      d2 = exact_divide(d2, g);
    }
  }
  if (!d1.is_constant()) {
    Polynomial g = gcd(n2, d1);
    if (!g.is_constant()) {
      n2 = exact_divide(n2, g);
      d1 = exact_divide(d1, g);
    }
  }
  *this = from_coprime(n1 * n2, d1 * d2);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw std::domain_error("division by the zero rational function");
  return *this *= from_coprime(other.den_, other.num_);
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  if (c == 0) return *this = RationalFunction();
  num_ *= c;
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(Unchecked{}, -num_, den_);
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

RationalFunction pow(const RationalFunction& f, Int k) {
  if (k < 0) {
    if (f.is_zero()) throw std::domain_error("zero rational function raised to a negative power");
    return pow(RationalFunction::from_coprime(f.den(), f.num()), -k);
  }
  return RationalFunction::from_coprime(pow(f.num(), static_cast<unsigned>(k)),
                                        pow(f.den(), static_cast<unsigned>(k)));
}

}  // namespace cyclo
