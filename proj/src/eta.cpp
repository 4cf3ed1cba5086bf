#include "cyclo/eta.hpp"

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

namespace {

/// sum_{k>=1} w(k) f(q^k) truncated to f's order; f must vanish at q = 0.
PowerSeries lambert_sum(const PowerSeries& f, bool weight_k) {
  const std::size_t N = f.order();
  PowerSeries out(N);
  for (std::size_t k = 1; k < N; ++k) {
    for (std::size_t i = 1; i * k < N; ++i) {
      if (f[i] == 0) continue;
      if (weight_k) {
        out[i * k] += f[i] * static_cast<long>(k);
      } else {
        out[i * k] += f[i];
      }
    }
  }
  return out;
}

std::string render(const PowerSeries& s) { return s.to_string(8); }

}  // namespace

PowerSeries lambert_L(std::size_t order) {
  PowerSeries out(order);
  for (std::size_t m = 1; m < order; ++m) {
    Int sigma = 0;
    for (Int d : divisors(static_cast<Int>(m))) sigma += d;
    out[m] = static_cast<long>(sigma);
  }
  return out;
}

PowerSeries lambert_L_from_quotients(std::size_t order) {
  PowerSeries out(order);
  for (std::size_t k = 1; k < order; ++k) {
    // k q^k / (1 - q^k) = k (q^k + q^{2k} + ...)
    for (std::size_t m = k; m < order; m += k) out[m] += static_cast<long>(k);
  }
  return out;
}

EtaExpansion eta_log_derivative(const ZetaProduct& z, std::size_t order) {
  if (order < 1) throw std::invalid_argument("eta expansion needs order >= 1");
  const Int n = z.conductor();
  EtaExpansion x;
  x.order = order;
  x.mu_e = z.milnor_number();

  PowerSeries product(order);
  product[0] = 1;
  for (Int d : z.divisors()) {
    const Int e = z.exponent(d);
    for (std::size_t m = static_cast<std::size_t>(d); m < order; m += static_cast<std::size_t>(d)) {
      for (Int t = 0; t < (e < 0 ? -e : e); ++t) {
        if (e > 0) {
          for (std::size_t i = order; i-- > m;) product[i] -= product[i - m];
        } else {
          for (std::size_t i = m; i < order; ++i) product[i] += product[i - m];
        }
      }
    }
  }
  x.direct = product.log_derivative();

  const PowerSeries L = lambert_L(order);
  const EvenFunction m = multiplicities(z);
  x.divisor_form = PowerSeries(order);
  x.cyclotomic_form = PowerSeries(order);
  x.ramanujan_form = PowerSeries(order);
  x.ramanujan_form_k = PowerSeries(order);
  for (Int d : z.divisors()) {
    const auto D = static_cast<std::size_t>(d);
    if (const Int e = z.exponent(d); e != 0) {
      x.divisor_form += L.substitute_power(D) * Rational(static_cast<long>(d * e));
    }
    const Rational weight = m(n / d);
    if (weight == 0) continue;
    const PowerSeries log_phi = expand(log_derivative(RationalFunction(cyclotomic(d))), order);
    x.cyclotomic_form += lambert_sum(log_phi, true) * weight;

    std::vector<Rational> top(D + 1);
    for (Int j = 1; j <= d; ++j) top[static_cast<std::size_t>(j)] = static_cast<long>(ramanujan_sum(d, j));
    const PowerSeries quotient =
        expand(RationalFunction(Polynomial(std::move(top)), Polynomial::binomial(D)), order);
    x.ramanujan_form += lambert_sum(quotient, false) * weight;
    x.ramanujan_form_k += lambert_sum(quotient, true) * weight;
  }
  return x;
}

int eta_sign(const EtaExpansion& x) {
  if (x.direct == x.divisor_form) return 1;
  if (x.direct == -x.divisor_form) return -1;
  return 0;
}

IdentityReport verify_eta(const ZetaProduct& z, std::size_t order) {
  const EtaExpansion x = eta_log_derivative(z, order);
  IdentityReport report("q d/dq log eta_bar " + z.to_string() + " to order " + std::to_string(order));
  report.set_detail("mu_e", x.mu_e);

  IdentityReport divisor("sum d e(d) L(q^d) up to a global sign");
  const int sign = eta_sign(x);
  if (sign == 0) {
    divisor.expect_equal("coefficients of -sum d e(d) L(q^d)", x.direct, -x.divisor_form, render);
  }
  divisor.set_detail("sign", sign);
  report.set_detail("sign", sign);
  report.add_child(std::move(divisor));

  IdentityReport cyclotomic("sum m(n/d) sum_k k q^k Phi_d'(q^k)/Phi_d(q^k)");
  cyclotomic.expect_equal("coefficients", x.direct, x.cyclotomic_form, render);
  report.add_child(std::move(cyclotomic));

  IdentityReport ramanujan("sum m(n/d) sum_k (sum_j c_d(j) q^{kj})/(q^{kd}-1)");
  if (!ramanujan.expect_equal("coefficients", x.direct, x.ramanujan_form, render) &&
      x.direct == x.ramanujan_form_k) {
    ramanujan.add_note("agrees once the k-th summand is multiplied by k");
  }
  report.add_child(std::move(ramanujan));

  IdentityReport ramanujan_k("sum m(n/d) sum_k k (sum_j c_d(j) q^{kj})/(q^{kd}-1)");
  ramanujan_k.expect_equal("coefficients", x.direct, x.ramanujan_form_k, render);
  report.add_child(std::move(ramanujan_k));
  return report;
}

IdentityReport verify_eta_all(const std::vector<std::pair<std::string, ZetaProduct>>& products, std::size_t order) {
  IdentityReport report("eta-product logarithmic derivatives to order " + std::to_string(order));
  std::vector<std::string> opposite;
  for (const auto& [name, z] : products) {
    IdentityReport entry = verify_eta(z, order);
    if (entry.details().value("sign", 0) == -1) {
      opposite.push_back(name);
    }
    IdentityReport named(name);
    named.add_child(std::move(entry));
    report.add_child(std::move(named));
  }
  if (!opposite.empty()) {
    report.add_flag("q d/dq log eta_bar = -sum d e(d) L(q^d): the displayed right side has the opposite sign (" +
                    std::to_string(opposite.size()) + " of " + std::to_string(products.size()) + " products)");
  }
  return report;
}

}  // namespace cyclo
