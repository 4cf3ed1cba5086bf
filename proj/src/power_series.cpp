#include "cyclo/power_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclo {

PowerSeries::PowerSeries(std::vector<Rational> coefficients, std::size_t order) : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order);
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  PowerSeries out(order);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < std::min(order, c.size()); ++i) out.coeffs_[i] = c[i];
  return out;
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)),
                     order);
}

PowerSeries PowerSeries::substitute_power(std::size_t d) const {
  if (d == 0) throw std::invalid_argument("substitute_power needs d >= 1");
  PowerSeries out(order());
  for (std::size_t i = 0; i * d < order(); ++i) out.coeffs_[i * d] = coeffs_[i];
  return out;
}

PowerSeries PowerSeries::q_derivative() const {
  PowerSeries out(order());
  for (std::size_t i = 1; i < order(); ++i) out.coeffs_[i] = coeffs_[i] * static_cast<long>(i);
  return out;
}

PowerSeries PowerSeries::inverse() const {
  if (order() == 0) return *this;
  if (coeffs_[0] == 0) throw std::domain_error("power series with zero constant term is not invertible");
  const Rational inv0 = 1 / coeffs_[0];
  PowerSeries out(order());
  out.coeffs_[0] = inv0;
  Rational acc, tmp;
  for (std::size_t k = 1; k < order(); ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), coeffs_[j].get_mpq_t(), out.coeffs_[k - j].get_mpq_t());
      acc += tmp;
    }
    out.coeffs_[k] = -acc * inv0;
  }
  return out;
}

PowerSeries PowerSeries::log_derivative() const { return q_derivative() * inverse(); }

PowerSeries& PowerSeries::operator+=(const PowerSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.order());
  for (std::size_t i = 0; i < order(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.order());
  for (std::size_t i = 0; i < order(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  PowerSeries out(n);
  Rational tmp;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out.coeffs_[i + j] += tmp;
    }
  }
  return out;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

long PowerSeries::first_difference(const PowerSeries& other) const {
  const std::size_t n = std::min(order(), other.order());
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] != other.coeffs_[i]) return static_cast<long>(i);
  }
  return -1;
}

std::string PowerSeries::to_string(std::size_t max_terms) const {
  std::ostringstream out;
  out << '[';
  const std::size_t shown = std::min(max_terms, order());
  for (std::size_t i = 0; i < shown; ++i) {
    if (i != 0) out << ',';
    out << coeffs_[i].get_str();
  }
  if (shown < order()) out << ",...";
  out << "] + O(q^" << order() << ')';
  return out.str();
}

PowerSeries expand(const RationalFunction& f, std::size_t order) {
  const Polynomial& den = f.den();
  if (den.coeff(0) == 0) throw std::domain_error("expand: denominator vanishes at q=0");
  const Polynomial& num = f.num();
  const auto& dc = den.coefficients();
  std::vector<std::size_t> nz;
  for (std::size_t j = 1; j < dc.size(); ++j) {
    if (dc[j] != 0) nz.push_back(j);
  }
  const Rational inv0 = 1 / dc[0];
  std::vector<Rational> out(order);
  Rational acc, tmp;
  for (std::size_t k = 0; k < order; ++k) {
    acc = num.coeff(k);
    for (std::size_t j : nz) {
      if (j > k) break;
      mpq_mul(tmp.get_mpq_t(), dc[j].get_mpq_t(), out[k - j].get_mpq_t());
      acc -= tmp;
    }
    out[k] = acc * inv0;
  }
  return PowerSeries(std::move(out), order);
}

}  // namespace cyclo
