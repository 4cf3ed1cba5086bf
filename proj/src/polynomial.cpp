#include "cyclo/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cyclo {

namespace {

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::binomial(std::size_t d) {
  if (d == 0) return Polynomial();
  std::vector<Rational> v(d + 1);
  v[0] = -1;
  v[d] = 1;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_ints(const std::vector<Int>& coefficients) {
  std::vector<Rational> v;
  v.reserve(coefficients.size());
  for (Int c : coefficients) v.emplace_back(static_cast<long>(c));
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_rational();
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::size_t Polynomial::lowest_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Polynomial out = *this;
  const Rational inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::substitute_power(std::size_t d) const {
  if (d == 0) throw std::invalid_argument("substitute_power needs d >= 1");
  if (d == 1 || is_zero()) return *this;
  std::vector<Rational> v((coeffs_.size() - 1) * d + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * d] = coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Rational> v(coeffs_.size() + k);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::unshifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) throw std::logic_error("unshifted: polynomial not divisible by q^k");
  }
  if (k >= coeffs_.size()) return Polynomial();
  return Polynomial(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  const auto& ac = a.coeffs_;
  const auto& bc = b.coeffs_;
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < bc.size(); ++j) {
    if (bc[j] != 0) nz.push_back(j);
  }
  std::vector<Rational> out(ac.size() + bc.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j : nz) {
      mpq_mul(tmp.get_mpq_t(), ac[i].get_mpq_t(), bc[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const bool monic = b.leading() == 1;
  const Rational inv_lead = monic ? Rational(1) : Rational(1 / b.leading());
  std::vector<std::size_t> nz;
  for (int j = 0; j < db; ++j) {
    if (bc[j] != 0) nz.push_back(static_cast<std::size_t>(j));
  }
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  Rational factor, tmp;
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (monic) {
      factor = rem[i];
    } else {
      mpq_mul(factor.get_mpq_t(), rem[i].get_mpq_t(), inv_lead.get_mpq_t());
    }
    const std::size_t base = static_cast<std::size_t>(i - db);
    quot[base] = factor;
    for (std::size_t j : nz) {
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), bc[j].get_mpq_t());
      rem[base + j] -= tmp;
    }
    rem[i] = 0;
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool try_exact_divide(const Polynomial& a, const Polynomial& b, Polynomial& quotient) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return false;
  quotient = std::move(q);
  return true;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  Polynomial q;
  if (!try_exact_divide(a, b, q)) {
    throw std::logic_error("non-exact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
  }
  return q;
}

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  Polynomial a = a_in.monic();
  Polynomial b = b_in.monic();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.is_constant()) return Polynomial::constant(1);
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Polynomial pow(const Polynomial& p, unsigned exp) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base = base * base;
  }
  return result;
}

Rational resultant(const Polynomial& a_in, const Polynomial& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return Rational(0);
  Polynomial a = a_in;
  Polynomial b = b_in;
  Rational result(1);
  for (;;) {
    const int da = a.degree();
    const int db = b.degree();
    if (db == 0) return result * pow(b.leading(), da);
    if (da == 0) return result * pow(a.leading(), db);
    if (da < db) {
      if ((da * db) % 2 != 0) result = -result;
      std::swap(a, b);
      continue;
    }
    // Res(a,b) = (-1)^{da db} Res(b,a) and Res(b,a) = lc(b)^{da-dr} Res(b, a mod b).
    Polynomial r = divmod(a, b).remainder;
    if (r.is_zero()) return Rational(0);
    if ((da * db) % 2 != 0) result = -result;
    result *= pow(b.leading(), da - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  if (n == 0) return Polynomial();
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      const Rational dx = xs[i] - xs[i - j];
      if (dx == 0) throw std::invalid_argument("interpolate: repeated abscissa");
      coef[i] = (coef[i] - coef[i - 1]) / dx;
    }
  }
  Polynomial result = Polynomial::constant(coef[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Polynomial(std::vector<Rational>{-xs[i], Rational(1)});
    result += Polynomial::constant(coef[i]);
  }
  return result;
}

}  // namespace cyclo
