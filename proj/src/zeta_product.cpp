#include "cyclo/zeta_product.hpp"

#include "cyclo/cyclotomic.hpp"
#include "cyclo/detail/scanner.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace cyclo {

namespace {

using detail::Scanner;

const std::vector<Int>& ramanujan_row(Int d, Int n, std::vector<Int>& storage) {
  storage.resize(static_cast<std::size_t>(n));
  for (Int k = 0; k < n; ++k) storage[static_cast<std::size_t>(k)] = ramanujan_sum(d, k);
  return storage;
}

Rational int_rational(Int v) { return Rational(static_cast<long>(v)); }

RationalFunction one_over(const Polynomial& p) { return RationalFunction::from_coprime(Polynomial::constant(1), p); }

/// 1 - q^d
Polynomial one_minus_power(Int d) { return -Polynomial::binomial(static_cast<std::size_t>(d)); }

/// Multiplies p by (q^d - 1)^k in place.
void multiply_binomial_power(Polynomial& p, Int d, Int k) {
  const Polynomial b = Polynomial::binomial(static_cast<std::size_t>(d));
  for (Int i = 0; i < k; ++i) p = p * b;
}

template <class T, class Render>
void compare(IdentityReport& report, const std::string& where, const T& lhs, const T& rhs, Render&& render) {
  report.expect_equal(where, lhs, rhs, render);
}

auto render_rf = [](const RationalFunction& f) { return f.to_string(); };
auto render_q = [](const Rational& x) { return x.get_str(); };

}  // namespace

ZetaProduct ZetaProduct::parse(std::string_view text) {
  Scanner in(text);
  in.skip_space();
  in.expect('n');
  in.expect('=');
  const std::size_t n_pos = in.position();
  const Int n = in.integer();
  if (n < 1) throw ParseError("conductor n must be positive", n_pos);
  in.expect(';');
  in.expect('e');
  in.expect('=');
  in.expect('{');
  std::map<Int, Int> values;
  if (!in.peek('}')) {
    for (;;) {
      in.skip_space();
      const std::size_t key_pos = in.position();
      const Int d = in.integer();
      if (d <= 0 || n % d != 0) {
        throw ParseError(std::to_string(d) + " is not a divisor of " + std::to_string(n), key_pos);
      }
      in.expect(':');
      const Int v = in.integer();
      if (!values.emplace(d, v).second) throw ParseError("duplicate divisor " + std::to_string(d), key_pos);
      if (in.peek(',')) {
        in.expect(',');
        continue;
      }
      break;
    }
  }
  in.expect('}');
  if (!in.at_end()) throw ParseError("unexpected trailing input", in.position());
  for (Int d : cyclo::divisors(n)) {
    if (!values.count(d)) {
      throw std::invalid_argument("exponent for divisor " + std::to_string(d) + " of " + std::to_string(n) +
                                  " is missing");
    }
  }
  return ZetaProduct(ExponentMap::from_map(n, values));
}

ZetaProduct ZetaProduct::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("e")) {
    throw std::invalid_argument("zeta product JSON needs fields 'n' and 'e'");
  }
  const Int n = j.at("n").get<Int>();
  if (n < 1) throw std::invalid_argument("conductor n must be positive");
  std::map<Int, Int> values;
  for (const auto& [key, value] : j.at("e").items()) {
    std::size_t used = 0;
    Int d = 0;
    try {
      d = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw std::invalid_argument("divisor key '" + key + "' is not an integer");
    values[d] = value.get<Int>();
  }
  return ZetaProduct(ExponentMap::from_map(n, values));
}

Int ZetaProduct::milnor_number() const {
  Int total = 0;
  for (Int v : e_.values()) total += v;
  return total;
}

DivisorMap ZetaProduct::rational_exponents() const {
  return DivisorMap::generate(conductor(), [&](Int d) { return int_rational(e_.at(d)); });
}

std::string ZetaProduct::to_string() const {
  std::ostringstream out;
  out << "n=" << conductor() << "; e={";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i != 0) out << ',';
    out << e_.divisors()[i] << ':' << e_.value_at_index(i);
  }
  out << '}';
  return out.str();
}

nlohmann::json ZetaProduct::to_json() const {
  nlohmann::json e = nlohmann::json::object();
  for (std::size_t i = 0; i < e_.size(); ++i) e[std::to_string(e_.divisors()[i])] = e_.value_at_index(i);
  return {{"n", conductor()}, {"e", e}};
}

EvenFunction EvenFunction::from_values(Int n, std::vector<Rational> values) {
  if (n < 1) throw std::invalid_argument("even function conductor must be positive");
  if (values.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("even function needs exactly n values");
  }
  EvenFunction f(n, std::move(values));
  if (!f.is_gcd_dependent()) throw std::invalid_argument("values do not depend only on gcd(k, n)");
  return f;
}

EvenFunction EvenFunction::from_gcd_values(const DivisorMap& f) {
  const Int n = f.conductor();
  std::vector<Rational> values(static_cast<std::size_t>(n));
  for (Int k = 0; k < n; ++k) values[static_cast<std::size_t>(k)] = f.at(gcd(k, n));
  return EvenFunction(n, std::move(values));
}

EvenFunction EvenFunction::zero(Int n) {
  if (n < 1) throw std::invalid_argument("even function conductor must be positive");
  return EvenFunction(n, std::vector<Rational>(static_cast<std::size_t>(n)));
}

const Rational& EvenFunction::operator()(Int k) const {
  Int r = k % n_;
  if (r < 0) r += n_;
  return values_[static_cast<std::size_t>(r)];
}

DivisorMap EvenFunction::on_divisors() const {
  return DivisorMap::generate(n_, [&](Int d) { return (*this)(d); });
}

bool EvenFunction::is_gcd_dependent() const {
  for (Int k = 0; k < n_; ++k) {
    if (values_[static_cast<std::size_t>(k)] != (*this)(gcd(k, n_))) return false;
  }
  return true;
}

std::string EvenFunction::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i != 0) out << ',';
    out << values_[i].get_str();
  }
  out << ']';
  return out.str();
}

nlohmann::json EvenFunction::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : values_) {
    if (is_integer(v) && v.get_num().fits_slong_p()) {
      out.push_back(v.get_num().get_si());
    } else {
      out.push_back(v.get_str());
    }
  }
  return out;
}

EvenFunction even_extension(const DivisorMap& e) { return EvenFunction::from_gcd_values(mobius_transform(e)); }

EvenFunction multiplicities(const ZetaProduct& z) {
  const Int n = z.conductor();
  return even_extension(DivisorMap::generate(n, [&](Int d) { return int_rational(z.exponent(n / d)); }));
}

EvenFunction power_sums(const ZetaProduct& z) {
  return even_extension(DivisorMap::generate(z.conductor(), [&](Int d) { return int_rational(d * z.exponent(d)); }));
}

ZetaProduct saito_transform(const ZetaProduct& z) {
  const Int n = z.conductor();
  return ZetaProduct(ExponentMap::generate(n, [&](Int d) { return z.exponent(n / d); }));
}

ZetaProduct saito_dual(const ZetaProduct& z) {
  const Int n = z.conductor();
  return ZetaProduct(ExponentMap::generate(n, [&](Int d) { return -z.exponent(n / d); }));
}

StarFunctions star_functions(const ZetaProduct& z) {
  const Int n = z.conductor();
  return {even_extension(z.rational_exponents()),
          even_extension(DivisorMap::generate(n, [&](Int d) { return int_rational(d * z.exponent(n / d)); }))};
}

ExponentMap cyclotomic_exponents(const ZetaProduct& z) {
  // Phi_d divides q^D - 1 exactly when d | D.
  const Int n = z.conductor();
  return ExponentMap::generate(n, [&](Int d) {
    Int total = 0;
    for (Int D : z.divisors()) {
      if (D % d == 0) total += z.exponent(D);
    }
    return total;
  });
}

RationalFunction to_rational_function(const ZetaProduct& z) {
  const Int n = z.conductor();
  Polynomial num = Polynomial::constant(1);
  Polynomial den = Polynomial::constant(1);
  for (Int d : z.divisors()) {
    const Int v = z.exponent(d);
    if (v > 0) multiply_binomial_power(num, d, v);
    if (v < 0) multiply_binomial_power(den, d, -v);
  }
  // The common factor is prod Phi_d^{min(v_num(d), v_den(d))}.
  Polynomial common = Polynomial::constant(1);
  for (Int d : cyclo::divisors(n)) {
    Int up = 0;
    Int down = 0;
    for (Int D : z.divisors()) {
      if (D % d != 0) continue;
      const Int v = z.exponent(D);
      if (v > 0) up += v;
      else down -= v;
    }
    const Int shared = std::min(up, down);
    if (shared > 0) common *= pow(cyclotomic(d), static_cast<unsigned>(shared));
  }
  if (!common.is_constant()) {
    num = exact_divide(num, common);
    den = exact_divide(den, common);
  }
  return RationalFunction::from_coprime(std::move(num), std::move(den));
}

ExponentMap factor_cyclotomic(const RationalFunction& f, Int n) {
  if (f.is_zero()) throw std::invalid_argument("factor_cyclotomic of the zero function");
  Polynomial num = f.num();
  Polynomial den = f.den();
  ExponentMap out(n, 0);
  for (Int d : cyclo::divisors(n)) {
    auto [vn, restn] = cyclotomic_valuation(num, d);
    auto [vd, restd] = cyclotomic_valuation(den, d);
    num = std::move(restn);
    den = std::move(restd);
    out.at(d) = static_cast<Int>(vn) - static_cast<Int>(vd);
  }
  if (!num.is_constant() || !den.is_constant()) {
    throw std::invalid_argument("rational function is not a product of Phi_d with d | " + std::to_string(n));
  }
  return out;
}

EvenFunction ramanujan_coefficients(const EvenFunction& a) {
  const Int n = a.conductor();
  std::vector<Rational> r(static_cast<std::size_t>(n));
  std::vector<Int> row;
  for (Int d : cyclo::divisors(n)) {
    const Rational& weight = a(n / d);
    if (weight == 0) continue;
    const auto& c = ramanujan_row(d, n, row);
    for (Int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] += weight * int_rational(c[static_cast<std::size_t>(k)]);
  }
  const Rational inv_n = make_rational(1, n);
  for (auto& v : r) v *= inv_n;
  return EvenFunction::from_gcd_values(DivisorMap::generate(n, [&](Int d) { return r[static_cast<std::size_t>(d % n)]; }));
}

EvenFunction ramanujan_reconstruct(const EvenFunction& r) {
  const Int n = r.conductor();
  std::vector<Rational> a(static_cast<std::size_t>(n));
  std::vector<Int> row;
  for (Int d : cyclo::divisors(n)) {
    const Rational& weight = r(n / d);
    if (weight == 0) continue;
    const auto& c = ramanujan_row(d, n, row);
    for (Int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] += weight * int_rational(c[static_cast<std::size_t>(k)]);
  }
  return EvenFunction::from_gcd_values(DivisorMap::generate(n, [&](Int d) { return a[static_cast<std::size_t>(d % n)]; }));
}

EvenFunction dft_power_sums(const EvenFunction& m) { return ramanujan_reconstruct(m); }

RationalFunction partial_zeta(const ZetaProduct& z, Int k) {
  const Int g = gcd(k, z.conductor());
  return to_rational_function(ZetaProduct(ExponentMap::generate(g, [&](Int d) { return z.exponent(d); })));
}

GeneratingFunctions generating_functions(const EvenFunction& a, const DivisorMap& e) {
  const Int n = a.conductor();
  if (e.conductor() != n) throw std::invalid_argument("generating_functions: conductor mismatch");
  const RationalFunction over_one_minus_qn = one_over(one_minus_power(n));
  const RationalFunction over_one_minus_q = one_over(one_minus_power(1));

  std::vector<Rational> low(static_cast<std::size_t>(n));
  std::vector<Rational> high(static_cast<std::size_t>(n) + 1);
  for (Int k = 0; k < n; ++k) low[static_cast<std::size_t>(k)] = a(k);
  for (Int k = 1; k <= n; ++k) high[static_cast<std::size_t>(k)] = a(k);

  GeneratingFunctions out;
  out.from_values = RationalFunction(Polynomial(low)) * over_one_minus_qn;
  out.shifted_from_values = RationalFunction(Polynomial(high)) * over_one_minus_qn;
  RationalFunction by_q_integers, shifted_by_q_integers;
  for (Int d : e.divisors()) {
    const Rational& c = e.at(d);
    if (c == 0) continue;
    const RationalFunction term = one_over(one_minus_power(d)) * c;
    out.from_e += term;
    out.shifted_from_e += term * RationalFunction(Polynomial::monomial(Rational(1), static_cast<std::size_t>(d)));
    const RationalFunction qi = one_over(q_integer(d)) * c;
    by_q_integers += qi;
    shifted_by_q_integers += qi * RationalFunction(Polynomial::monomial(Rational(1), static_cast<std::size_t>(d)));
  }
  out.from_q_integers = over_one_minus_q * by_q_integers;
  out.shifted_from_q_integers = over_one_minus_q * shifted_by_q_integers;
  return out;
}

IdentityReport gf_power_series(const EvenFunction& a, const DivisorMap& e) {
  IdentityReport report("gf_power_series n=" + std::to_string(a.conductor()));
  const GeneratingFunctions g = generating_functions(a, e);

  IdentityReport k0("sum_{k=0}^{n-1} a(k) q^k/(1-q^n)");
  compare(k0, "values vs 1/(1-q^d) form", g.from_values, g.from_e, render_rf);
  compare(k0, "1/(1-q^d) form vs [d]_q form", g.from_e, g.from_q_integers, render_rf);
  k0.set_detail("lhs", g.from_values.to_string());
  k0.set_detail("rhs", g.from_e.to_string());

  IdentityReport k1("sum_{k=1}^{n} a(k) q^k/(1-q^n)");
  compare(k1, "values vs q^d/(1-q^d) form", g.shifted_from_values, g.shifted_from_e, render_rf);
  compare(k1, "q^d/(1-q^d) form vs [d]_q form", g.shifted_from_e, g.shifted_from_q_integers, render_rf);
  k1.set_detail("lhs", g.shifted_from_values.to_string());
  k1.set_detail("rhs", g.shifted_from_e.to_string());

  // The two variants differ by the constant a(0) = sum e(d).
  Rational total(0);
  for (const auto& v : e.values()) total += v;
  compare(k1, "difference of the variants equals sum e(d)", g.from_values - g.shifted_from_values,
          RationalFunction::constant(total), render_rf);

  report.add_child(std::move(k0));
  report.add_child(std::move(k1));
  return report;
}

IdentityReport verify_mobius_pairing(const ZetaProduct& z, const BasicDivisorMap<RationalFunction>& x) {
  const Int n = z.conductor();
  if (x.conductor() != n) throw std::invalid_argument("verify_mobius_pairing: conductor mismatch");
  IdentityReport report("moebius pairing " + z.to_string());
  const EvenFunction m = multiplicities(z);
  const EvenFunction p = power_sums(z);
  const auto zd = inverse_mobius_transform(x);

  RationalFunction lhs_m, rhs_m, lhs_p, rhs_p;
  for (Int d : z.divisors()) {
    const RationalFunction& zz = zd.at(d);
    const RationalFunction& xx = x.at(d);
    if (m(n / d) != 0) lhs_m += zz * m(n / d);
    if (p(n / d) != 0) lhs_p += zz * p(n / d);
    if (z.exponent(d) != 0) rhs_m += xx * int_rational(z.exponent(d));
    if (z.exponent(n / d) != 0) rhs_p += xx * int_rational((n / d) * z.exponent(n / d));
  }
  compare(report, "sum m(n/d) z_d = sum e(d) x_d", lhs_m, rhs_m, render_rf);
  compare(report, "sum p(n/d) z_d = sum (n/d) e(n/d) x_d", lhs_p, rhs_p, render_rf);
  return report;
}

std::string to_string(PairingPreset p) {
  switch (p) {
    case PairingPreset::necklace:
      return "necklace";
    case PairingPreset::log_derivative:
      return "log_derivative";
    case PairingPreset::ramanujan_form:
      return "ramanujan_form";
  }
  return "unknown";
}

IdentityReport verify_mobius_pairing(const ZetaProduct& z, PairingPreset preset) {
  const Int n = z.conductor();
  BasicDivisorMap<RationalFunction> x(n);
  BasicDivisorMap<RationalFunction> closed(n);
  for (Int d : z.divisors()) {
    const auto du = static_cast<std::size_t>(d);
    const Polynomial qd = Polynomial::monomial(Rational(1), du);
    switch (preset) {
      case PairingPreset::necklace:
        x.at(d) = RationalFunction(qd);
        closed.at(d) = RationalFunction(necklace(d) * int_rational(d));
        break;
      case PairingPreset::log_derivative:
        x.at(d) = RationalFunction(qd * int_rational(d), Polynomial::binomial(du));
        closed.at(d) = log_derivative(RationalFunction(cyclotomic(d)));
        break;
      case PairingPreset::ramanujan_form: {
        x.at(d) = RationalFunction(qd * int_rational(d), Polynomial::binomial(du));
        std::vector<Rational> top(du + 1);
        for (Int k = 1; k <= d; ++k) top[static_cast<std::size_t>(k)] = int_rational(ramanujan_sum(d, k));
        closed.at(d) = RationalFunction(Polynomial(top), Polynomial::binomial(du));
        break;
      }
    }
  }
  IdentityReport report(to_string(preset) + " preset " + z.to_string());
  IdentityReport closed_form("inverse Moebius transform of x_d equals the closed form");
  const auto computed = inverse_mobius_transform(x);
  for (Int d : z.divisors()) {
    compare(closed_form, "d=" + std::to_string(d), computed.at(d), closed.at(d), render_rf);
  }
  report.add_child(std::move(closed_form));

  // Both lines with the closed form substituted for z_d.
  const EvenFunction m = multiplicities(z);
  const EvenFunction p = power_sums(z);
  RationalFunction lhs_m, rhs_m, lhs_p, rhs_p;
  for (Int d : z.divisors()) {
    if (m(n / d) != 0) lhs_m += closed.at(d) * m(n / d);
    if (p(n / d) != 0) lhs_p += closed.at(d) * p(n / d);
    if (z.exponent(d) != 0) rhs_m += x.at(d) * int_rational(z.exponent(d));
    if (z.exponent(n / d) != 0) rhs_p += x.at(d) * int_rational((n / d) * z.exponent(n / d));
  }
  IdentityReport lines("pairing with the closed form");
  compare(lines, "m line", lhs_m, rhs_m, render_rf);
  compare(lines, "p line", lhs_p, rhs_p, render_rf);
  report.add_child(std::move(lines));
  return report;
}

IdentityReport verify_prop3(const ZetaProduct& z, const std::vector<Int>& s_values) {
  const Int n = z.conductor();
  IdentityReport report("phi_s identities " + z.to_string());
  const EvenFunction m = multiplicities(z);
  const EvenFunction p = power_sums(z);
  const Rational inv_n = make_rational(1, n);
  for (Int s : s_values) {
    Rational l1, r1, l2, r2, l3, r3, l4, r4;
    for (Int d : z.divisors()) {
      const Rational dq = int_rational(d);
      const Rational phi_1ms = phi_s(d, 1 - s);
      const Rational phi_ms = phi_s(d, -s);
      const Rational d_pow = pow(dq, -s);
      l1 += m(n / d) * phi_1ms;
      r1 += int_rational(d * z.exponent(d)) * d_pow;
      l2 += p(n / d) * phi_1ms;
      r2 += int_rational(z.exponent(n / d)) * d_pow;
      l3 += m(n / d) * phi_ms;
      r3 += int_rational(z.exponent(d)) * d_pow;
      l4 += p(n / d) * phi_ms;
      r4 += int_rational((n / d) * z.exponent(n / d)) * d_pow;
    }
    l2 *= inv_n;
    const std::string at = " at s=" + std::to_string(s);
    compare(report, "sum m(n/d) phi_{1-s}(d) = sum d e(d)/d^s" + at, l1, r1, render_q);
    compare(report, "(1/n) sum p(n/d) phi_{1-s}(d) = sum e(n/d)/d^s" + at, l2, r2, render_q);
    compare(report, "sum m(n/d) phi_{-s}(d) = sum e(d)/d^s" + at, l3, r3, render_q);
    compare(report, "sum p(n/d) phi_{-s}(d) = sum (n/d) e(n/d)/d^s" + at, l4, r4, render_q);
  }
  return report;
}

IdentityReport generalized_pair_check(const DivisorMap& F, Int s) {
  const Int n = F.conductor();
  IdentityReport report("generalized Ramanujan pair n=" + std::to_string(n) + " s=" + std::to_string(s));
  const DivisorMap f_s = DivisorMap::generate(n, [&](Int g) {
    Rational total;
    for (Int d : cyclo::divisors(g)) total += F.at(d) * pow(int_rational(d), -s);
    return total;
  });
  const DivisorMap f_prime = DivisorMap::generate(n, [&](Int g) {
    Rational total;
    for (Int d : cyclo::divisors(g)) total += F.at(n / d) * pow(int_rational(n / d), -(s + 1));
    return total;
  });
  for (Int k = 0; k < n; ++k) {
    Rational rhs;
    for (Int d : cyclo::divisors(n)) rhs += f_prime.at(gcd(n / d, n)) * int_rational(ramanujan_sum(d, k));
    compare(report, "k=" + std::to_string(k), f_s.at(gcd(k, n)), rhs, render_q);
  }
  return report;
}

}  // namespace cyclo
