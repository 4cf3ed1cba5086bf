#include "cyclo/rational.hpp"

#include <stdexcept>

namespace cyclo {

Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, Int exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return pow(Rational(1) / base, -exp);
  }
  Rational result(1);
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exp);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

Int to_int(const Rational& x) {
  if (!is_integer(x)) throw std::domain_error("value " + x.get_str() + " is not an integer");
  if (!x.get_num().fits_slong_p()) throw std::domain_error("integer " + x.get_str() + " out of range");
  return x.get_num().get_si();
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace cyclo
