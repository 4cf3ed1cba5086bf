#include "cyclo/weights.hpp"

#include "cyclo/detail/scanner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cyclo {

namespace {

Rational q_of(Int v) { return Rational(static_cast<long>(v)); }

Rational power(Int base, Int exp) { return pow(q_of(base), exp); }

/// Collects c / (q^D - 1) terms; the rational function is assembled over q^n - 1.
PartialFractions assemble(Int n, const std::vector<std::pair<Rational, Int>>& terms) {
  PartialFractions out{RationalFunction(), DivisorMap(n, Rational(0))};
  std::vector<Rational> top(static_cast<std::size_t>(n));
  for (const auto& [coef, D] : terms) {
    if (D < 1 || n % D != 0) {
      throw std::invalid_argument("term 1/(q^" + std::to_string(D) + "-1) does not sit on a divisor of " +
                                  std::to_string(n));
    }
    out.line.at(D) += coef;
    // c/(q^D-1) = c (1 + q^D + ... + q^{n-D}) / (q^n-1)
    for (Int j = 0; j < n; j += D) top[static_cast<std::size_t>(j)] += coef;
  }
  out.gf = RationalFunction(Polynomial(std::move(top)), Polynomial::binomial(static_cast<std::size_t>(n)));
  return out;
}

/// sum_{k<n} f(k) q^k / (q^n - 1)
RationalFunction periodic_gf(const EvenFunction& f) {
  return RationalFunction(Polynomial(f.values()), Polynomial::binomial(static_cast<std::size_t>(f.conductor())));
}

Rational dirichlet_value(const DivisorMap& line, Int s) {
  Rational out(0);
  for (Int d : line.divisors()) {
    if (line.at(d) != 0) out += line.at(d) * power(d, -s);
  }
  return out;
}

std::string render_rf(const RationalFunction& f) { return f.to_string(); }
std::string render_q(const Rational& x) { return x.get_str(); }

void check_positive(const WeightSystem& w) {
  if (w.a < 1 || w.b < 1 || w.c < 1 || w.n < 1) throw std::invalid_argument("weights and degree must be positive");
}

std::vector<Int> dividing_weights(const WeightSystem& w) {
  std::vector<Int> out;
  for (Int d : std::set<Int>{w.a, w.b, w.c}) {
    if (w.n % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<Int> dividing_alphas(const WeightSystem& w, const SeifertData& s) {
  std::vector<Int> out;
  for (const auto& [alpha, beta] : s.pairs) {
    if (w.n % alpha == 0) out.push_back(alpha);
  }
  return out;
}

}  // namespace

WeightSystem WeightSystem::parse(std::string_view text) {
  detail::Scanner in(text);
  WeightSystem w;
  const auto positive = [&in] {
    const std::size_t at = (in.skip_space(), in.position());
    const Int v = in.integer();
    if (v < 1) throw ParseError("weights and degree must be positive", at);
    return v;
  };
  w.a = positive();
  in.expect(',');
  w.b = positive();
  in.expect(',');
  w.c = positive();
  in.expect(';');
  w.n = positive();
  if (!in.at_end()) throw ParseError("unexpected trailing input", in.position());
  return w;
}

std::string WeightSystem::to_string() const {
  std::ostringstream out;
  out << '(' << a << ',' << b << ',' << c << ';' << n << ')';
  return out.str();
}

Rational WeightSystem::milnor_number() const {
  return Rational(q_of((n - a) * (n - b) * (n - c)) / q_of(a * b * c));
}

SeifertData SeifertData::parse(std::string_view text) {
  detail::Scanner in(text);
  SeifertData s;
  std::size_t at = (in.skip_space(), in.position());
  s.g = in.integer();
  if (s.g < 0) throw ParseError("genus must be nonnegative", at);
  in.expect(';');
  if (in.at_end()) return s;
  while (true) {
    at = (in.skip_space(), in.position());
    const Int alpha = in.integer();
    in.expect('/');
    const Int beta = in.integer();
    if (alpha < 1 || beta < 1) throw ParseError("Seifert pairs must be positive", at);
    s.pairs.emplace_back(alpha, beta);
    if (in.at_end()) break;
    in.expect(',');
  }
  return s;
}

std::string SeifertData::to_string() const {
  std::ostringstream out;
  out << g << ';';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out << (i == 0 ? " " : ",") << pairs[i].first << '/' << pairs[i].second;
  }
  return out.str();
}

Polynomial spectral_gf(const WeightSystem& w) {
  check_positive(w);
  if (w.a >= w.n || w.b >= w.n || w.c >= w.n) {
    throw NonRegularWeights("weights must be smaller than the degree " + w.to_string());
  }
  // q^n - q^x = q^x (q^{n-x} - 1)
  Polynomial top = Polynomial::constant(1);
  Polynomial bottom = Polynomial::constant(1);
  for (Int x : {w.a, w.b, w.c}) {
    top *= Polynomial::binomial(static_cast<std::size_t>(w.n - x));
    bottom *= Polynomial::binomial(static_cast<std::size_t>(x));
  }
  Polynomial quotient;
  if (!try_exact_divide(top, bottom, quotient)) {
    throw NonRegularWeights("spectral quotient is not a polynomial for " + w.to_string());
  }
  const Int shift = w.a + w.b + w.c - w.n;
  if (shift < 0) throw NonRegularWeights("spectral quotient has a pole at q = 0 for " + w.to_string());
  Polynomial out = quotient.shifted(static_cast<std::size_t>(shift));
  for (const auto& x : out.coefficients()) {
    if (!is_integer(x) || x < 0) {
      throw NonRegularWeights("spectral coefficients are not nonnegative integers for " + w.to_string());
    }
  }
  return out;
}

PartialFractions m_gf_from_weights(const WeightSystem& w) {
  check_positive(w);
  const Int n = w.n, a = w.a, b = w.b, c = w.c;
  std::vector<std::pair<Rational, Int>> terms;
  terms.emplace_back(q_of(n * n) / q_of(a * b * c), 1);
  terms.emplace_back(Rational(-1), n);
  for (Int x : {a, b, c}) terms.emplace_back(q_of(gcd(x, n)) / q_of(x), gcd(x, n));
  for (auto [x, y] : {std::pair{b, c}, std::pair{a, c}, std::pair{a, b}}) {
    const Int g = gcd(gcd(x, y), n);
    terms.emplace_back(-q_of(n * g) / q_of(x * y), g);
  }
  return assemble(n, terms);
}

PartialFractions p_gf_from_weights(const WeightSystem& w) {
  check_positive(w);
  const Int n = w.n, a = w.a, b = w.b, c = w.c;
  std::vector<std::pair<Rational, Int>> terms;
  terms.emplace_back(q_of(n * n * n) / q_of(a * b * c), n);
  terms.emplace_back(Rational(-1), 1);
  for (Int x : {a, b, c}) terms.emplace_back(q_of(n) / q_of(x), n / gcd(x, n));
  for (auto [x, y] : {std::pair{b, c}, std::pair{a, c}, std::pair{a, b}}) {
    const Int g = gcd(gcd(x, y), n);
    terms.emplace_back(-q_of(n * n) / q_of(x * y), n / g);
  }
  return assemble(n, terms);
}

Rational m_dirichlet_from_weights(const WeightSystem& w, Int s) {
  check_positive(w);
  const Int n = w.n, a = w.a, b = w.b, c = w.c;
  Rational out = q_of(n * n) / q_of(a * b * c) - power(n, -s);
  for (Int x : {a, b, c}) out += 1 / (q_of(x) * power(gcd(x, n), s - 1));
  for (auto [x, y] : {std::pair{b, c}, std::pair{a, c}, std::pair{a, b}}) {
    out -= q_of(n) / (q_of(x * y) * power(gcd(gcd(x, y), n), s - 1));
  }
  return out;
}

Rational p_dirichlet_from_weights(const WeightSystem& w, Int s) {
  check_positive(w);
  const Int n = w.n, a = w.a, b = w.b, c = w.c;
  Rational out = 1 / (q_of(a * b * c) * power(n, s - 3)) - 1;
  for (Int x : {a, b, c}) out += power(gcd(x, n), s) / (q_of(x) * power(n, s - 1));
  for (auto [x, y] : {std::pair{b, c}, std::pair{a, c}, std::pair{a, b}}) {
    out -= power(gcd(gcd(x, y), n), s) / (q_of(x * y) * power(n, s - 2));
  }
  return out;
}

RationalFunction char_poly_from_seifert(const WeightSystem& w, const SeifertData& s) {
  check_positive(w);
  const Int n = w.n;
  const auto one_minus = [](Int D) {
    return RationalFunction(Polynomial::binomial(static_cast<std::size_t>(D)) * Rational(-1));
  };
  RationalFunction out = pow(one_minus(n), 2 * s.g - 2 + s.r());
  for (Int d : dividing_weights(w)) out *= one_minus(n / d);
  out /= one_minus(1);
  for (Int alpha : dividing_alphas(w, s)) out /= one_minus(n / alpha);
  return out;
}

ZetaProduct zeta_from_seifert(const WeightSystem& w, const SeifertData& s) {
  check_positive(w);
  const Int n = w.n;
  ExponentMap e(n, 0);
  e.at(n) += 2 * s.g - 2 + s.r();
  for (Int d : dividing_weights(w)) e.at(n / d) += 1;
  e.at(1) -= 1;
  for (Int alpha : dividing_alphas(w, s)) e.at(n / alpha) -= 1;
  return ZetaProduct(std::move(e));
}

SeifertForms seifert_m_forms(const WeightSystem& w, const SeifertData& s) {
  check_positive(w);
  const Int n = w.n;
  const Rational chi = q_of(2 * s.g - 2 + s.r());
  std::vector<std::pair<Rational, Int>> m_terms{{chi, 1}, {Rational(-1), n}};
  std::vector<std::pair<Rational, Int>> p_terms{{chi * static_cast<long>(n), n}, {Rational(-1), 1}};
  for (Int d : dividing_weights(w)) {
    m_terms.emplace_back(Rational(1), d);
    p_terms.emplace_back(q_of(n / d), n / d);
  }
  for (Int alpha : dividing_alphas(w, s)) {
    m_terms.emplace_back(Rational(-1), alpha);
    p_terms.emplace_back(-q_of(n / alpha), n / alpha);
  }
  return {assemble(n, m_terms), assemble(n, p_terms)};
}

Rational seifert_m_dirichlet(const WeightSystem& w, const SeifertData& s, Int s_value) {
  Rational out = q_of(2 * s.g - 2 + s.r()) - power(w.n, -s_value);
  for (Int d : dividing_weights(w)) out += power(d, -s_value);
  for (Int alpha : dividing_alphas(w, s)) out -= power(alpha, -s_value);
  return out;
}

Rational seifert_p_dirichlet(const WeightSystem& w, const SeifertData& s, Int s_value) {
  Rational out = q_of(2 * s.g - 2 + s.r()) - power(w.n, s_value - 1);
  for (Int d : dividing_weights(w)) out += power(d, s_value - 1);
  for (Int alpha : dividing_alphas(w, s)) out -= power(alpha, s_value - 1);
  return out;
}

IdentityReport verify_weights(const WeightSystem& w) {
  const Int n = w.n;
  IdentityReport report("weight system " + w.to_string());
  const PartialFractions mf = m_gf_from_weights(w);
  const PartialFractions pf = p_gf_from_weights(w);
  const EvenFunction m = even_extension(mf.line);
  const EvenFunction p = even_extension(pf.line);
  report.set_detail("m_line", to_string(mf.line));
  report.set_detail("p_line", to_string(pf.line));

  IdentityReport spectral("spectral generating function");
  try {
    const Polynomial sp = spectral_gf(w);
    spectral.set_detail("spectral", sp.to_string());
    Rational total(0);
    for (const auto& x : sp.coefficients()) total += x;
    spectral.expect_equal("coefficient sum vs Milnor number", total, w.milnor_number(), render_q);
    const std::vector<Rational>& cs = sp.coefficients();
    // q^n f(1/q) = f
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Int j = n - static_cast<Int>(i);
      const Rational mirror = j >= 0 && j < static_cast<Int>(cs.size()) ? cs[static_cast<std::size_t>(j)] : Rational(0);
      if (cs[i] != mirror) {
        spectral.record_mismatch("reciprocity q^n f(1/q) = f at q^" + std::to_string(i), cs[i].get_str(),
                                 mirror.get_str());
        break;
      }
    }
    const Int expected_degree = 2 * n - (w.a + w.b + w.c);
    if (sp.degree() != expected_degree) {
      spectral.record_mismatch("degree", std::to_string(sp.degree()), std::to_string(expected_degree));
    }
    std::vector<Rational> folded(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < cs.size(); ++i) folded[i % static_cast<std::size_t>(n)] += cs[i];
    const Polynomial reduced(std::move(folded));
    spectral.expect_equal("reduction mod q^n-1 vs sum m(k) q^k", reduced, Polynomial(m.values()),
                          [](const Polynomial& x) { return x.to_string(); });
  } catch (const NonRegularWeights& e) {
    spectral.record_mismatch("regularity", e.what(), "polynomial with nonnegative integer coefficients");
  }
  report.add_child(std::move(spectral));

  IdentityReport lines("m and p lines");
  for (Int d : mf.line.divisors()) {
    lines.expect_equal("p-line at d=" + std::to_string(d), pf.line.at(d), Rational(mf.line.at(n / d) * static_cast<long>(d)),
                       render_q);
  }
  lines.expect_equal("p = DFT of m", p, dft_power_sums(m), [](const EvenFunction& f) { return f.to_string(); });
  lines.expect_equal("p(0) vs Milnor number", p(0), w.milnor_number(), render_q);
  report.add_child(std::move(lines));

  IdentityReport dirichlet("Dirichlet forms at s = -2..3");
  for (Int s = -2; s <= 3; ++s) {
    dirichlet.expect_equal("m at s=" + std::to_string(s), m_dirichlet_from_weights(w, s),
                           dirichlet_value(mf.line, s), render_q);
    dirichlet.expect_equal("p at s=" + std::to_string(s), p_dirichlet_from_weights(w, s),
                           dirichlet_value(pf.line, s), render_q);
  }
  report.add_child(std::move(dirichlet));
  return report;
}

IdentityReport verify_seifert(const WeightSystem& w, const SeifertData& s) {
  const Int n = w.n;
  IdentityReport report("Seifert data " + s.to_string() + " on " + w.to_string());
  const ZetaProduct z = zeta_from_seifert(w, s);
  report.set_detail("zeta", z.to_json());
  for (const auto& [alpha, beta] : s.pairs) {
    if (n % alpha != 0) report.add_note("alpha=" + std::to_string(alpha) + " does not divide n and is skipped");
  }

  IdentityReport product("characteristic polynomial vs exponents");
  const RationalFunction cp = char_poly_from_seifert(w, s);
  const RationalFunction zr = to_rational_function(z);
  if (cp == zr) {
    product.set_detail("sign", 1);
  } else if (cp == -zr) {
    product.set_detail("sign", -1);
  } else {
    product.record_mismatch("rational function", cp.to_string(), zr.to_string());
  }
  report.add_child(std::move(product));

  const SeifertForms forms = seifert_m_forms(w, s);
  const EvenFunction m = multiplicities(z);
  const EvenFunction p = power_sums(z);
  IdentityReport gf("generating functions");
  gf.expect_equal("m form", forms.m.gf, periodic_gf(m), render_rf);
  gf.expect_equal("p form", forms.p.gf, periodic_gf(p), render_rf);
  gf.expect_equal("p(0) vs Milnor number", p(0), w.milnor_number(), render_q);
  report.add_child(std::move(gf));

  IdentityReport dirichlet("Dirichlet forms at s = -2..3");
  for (Int sv = -2; sv <= 3; ++sv) {
    dirichlet.expect_equal("m at s=" + std::to_string(sv), seifert_m_dirichlet(w, s, sv),
                           dirichlet_value(inverse_mobius_transform(m.on_divisors()), sv), render_q);
    dirichlet.expect_equal("p at s=" + std::to_string(sv), seifert_p_dirichlet(w, s, sv),
                           Rational(power(n, sv - 1) * dirichlet_value(inverse_mobius_transform(p.on_divisors()), sv)), render_q);
  }
  report.add_child(std::move(dirichlet));
  return report;
}

}  // namespace cyclo
