#include "cyclo/dirichlet.hpp"

#include "cyclo/cyclotomic.hpp"

#include <sstream>
#include <tuple>

namespace cyclo {

namespace {

Rational int_rational(Int v) { return Rational(static_cast<long>(v)); }


/// Reports the first differing coefficient of two series under `label`.
Int compare_series(IdentityReport& report, const std::string& label, const DirichletSeries& lhs,
                   const DirichletSeries& rhs) {
  const Int k = lhs.first_difference(rhs);
  if (k != 0) {
    report.record_mismatch(label + " at k=" + std::to_string(k), lhs[k].get_str(), rhs[k].get_str());
  }
  return k;
}

}  // namespace

DirichletSeries DirichletSeries::finite(std::size_t order, const std::map<Int, Rational>& terms) {
  DirichletSeries out(order);
  for (const auto& [k, c] : terms) {
    if (k < 1) throw std::invalid_argument("Dirichlet series index must be positive");
    if (static_cast<std::size_t>(k) <= order) out.coeffs_[static_cast<std::size_t>(k)] += c;
  }
  return out;
}

DirichletSeries DirichletSeries::unit(std::size_t order) {
  DirichletSeries out(order);
  if (order >= 1) out.coeffs_[1] = 1;
  return out;
}

DirichletSeries DirichletSeries::zeta(std::size_t order) {
  return generate(order, [](Int) { return Rational(1); });
}

DirichletSeries DirichletSeries::mobius(std::size_t order) {
  return generate(order, [](Int k) { return Rational(cyclo::mobius(k)); });
}

DirichletSeries DirichletSeries::zeta_rs(Int r, std::size_t order) { return zeta(order).dilate(r); }

DirichletSeries DirichletSeries::inverse() const {
  const std::size_t n = order();
  if (n == 0) return *this;
  if (coeffs_[1] == 0) throw std::domain_error("Dirichlet series with g(1) = 0 is not invertible");
  const Rational inv1 = 1 / coeffs_[1];
  DirichletSeries out(n);
  std::vector<Rational> acc(n + 1);
  Rational tmp;
  for (std::size_t k = 1; k <= n; ++k) {
    out.coeffs_[k] = k == 1 ? inv1 : Rational(-acc[k] * inv1);
    if (out.coeffs_[k] == 0) continue;
    for (std::size_t d = 2; d * k <= n; ++d) {
      if (coeffs_[d] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), coeffs_[d].get_mpq_t(), out.coeffs_[k].get_mpq_t());
      acc[d * k] += tmp;
    }
  }
  return out;
}

DirichletSeries DirichletSeries::shift() const {
  DirichletSeries out = *this;
  for (std::size_t k = 1; k < out.coeffs_.size(); ++k) out.coeffs_[k] *= static_cast<long>(k);
  return out;
}

DirichletSeries DirichletSeries::dilate(Int r) const {
  if (r < 1) throw std::invalid_argument("dilate needs r >= 1");
  const std::size_t n = order();
  DirichletSeries out(n);
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t power = 1;
    bool fits = true;
    for (Int i = 0; i < r; ++i) {
      if (power > n / k) {
        fits = false;
        break;
      }
      power *= k;
    }
    if (!fits) break;
    out.coeffs_[power] = coeffs_[k];
  }
  return out;
}

DirichletSeries DirichletSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated Dirichlet series");
  DirichletSeries out(order);
  for (std::size_t k = 1; k <= order; ++k) out.coeffs_[k] = coeffs_[k];
  return out;
}

DirichletSeries& DirichletSeries::operator+=(const DirichletSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

DirichletSeries& DirichletSeries::operator-=(const DirichletSeries& other) {
  if (other.order() < order()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 1; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

DirichletSeries& DirichletSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

DirichletSeries operator*(const DirichletSeries& a, const DirichletSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  DirichletSeries out(n);
  Rational tmp;
  for (std::size_t i = 1; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 1; i * j <= n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out.coeffs_[i * j] += tmp;
    }
  }
  return out;
}

Int DirichletSeries::first_difference(const DirichletSeries& other) const {
  const std::size_t n = std::min(order(), other.order());
  for (std::size_t k = 1; k <= n; ++k) {
    if (coeffs_[k] != other.coeffs_[k]) return static_cast<Int>(k);
  }
  return 0;
}

std::string DirichletSeries::to_string(std::size_t max_terms) const {
  std::ostringstream out;
  out << '[';
  const std::size_t shown = std::min(max_terms, order());
  for (std::size_t k = 1; k <= shown; ++k) {
    if (k != 1) out << ',';
    out << coeffs_[k].get_str();
  }
  if (shown < order()) out << ",...";
  out << "] (k=1.." << order() << ')';
  return out.str();
}

nlohmann::json DirichletSeries::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t k = 1; k <= order(); ++k) {
    const Rational& c = coeffs_[k];
    if (is_integer(c) && c.get_num().fits_slong_p()) {
      out.push_back(c.get_num().get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

DirichletSeries mul(const DirichletSeries& a, const DirichletSeries& b) { return a * b; }
DirichletSeries invert(const DirichletSeries& a) { return a.inverse(); }
DirichletSeries shift(const DirichletSeries& a) { return a.shift(); }
DirichletSeries zeta_rs(Int r, std::size_t order) { return DirichletSeries::zeta_rs(r, order); }

DirichletSeries series_of(const ArithmeticFunction& f, std::size_t order) {
  return DirichletSeries::generate(order, [&](Int k) { return f(k); });
}

DirichletSeries series_of(const EvenFunction& f, std::size_t order) {
  return DirichletSeries::generate(order, [&](Int k) { return f(k); });
}

GTransforms g_transforms(const ZetaProduct& z, const DirichletSeries& G) {
  const Int n = z.conductor();
  const std::size_t N = G.order();
  std::map<Int, Rational> m, p, ms, ps;
  for (Int d : z.divisors()) {
    m[d] = int_rational(z.exponent(n / d));
    p[d] = int_rational(d * z.exponent(d));
    ms[d] = int_rational(z.exponent(d));
    ps[d] = int_rational(d * z.exponent(n / d));
  }
  return {G * DirichletSeries::finite(N, m), G * DirichletSeries::finite(N, p), G * DirichletSeries::finite(N, ms),
          G * DirichletSeries::finite(N, ps)};
}

PsGTransforms ps_g_transforms(const ZetaProduct& z, const PowerSeries& g) {
  if (g.order() > 0 && g[0] != 0) throw std::invalid_argument("ps_g_transforms: g must have zero constant term");
  const Int n = z.conductor();
  RationalFunction sm, sp;
  for (Int d : z.divisors()) {
    const RationalFunction inv = RationalFunction::from_coprime(Polynomial::constant(1), q_integer(d));
    if (z.exponent(n / d) != 0) sm += inv * int_rational(z.exponent(n / d));
    if (z.exponent(d) != 0) sp += inv * int_rational(d * z.exponent(d));
  }
  return {g * expand(sm, g.order()), g * expand(sp, g.order())};
}

IdentityReport verify_ps_g_geometric(const ZetaProduct& z, std::size_t order) {
  const Int n = z.conductor();
  IdentityReport report("power-series transforms with g = q/(1-q) " + z.to_string());
  PowerSeries g(order);
  for (std::size_t k = 1; k < order; ++k) g[k] = 1;
  const PsGTransforms t = ps_g_transforms(z, g);

  const DivisorMap em = DivisorMap::generate(n, [&](Int d) { return int_rational(z.exponent(n / d)); });
  const DivisorMap ep = DivisorMap::generate(n, [&](Int d) { return int_rational(d * z.exponent(d)); });
  const RationalFunction q_monomial(Polynomial::monomial(Rational(1), 1));
  const PowerSeries expected_m = expand(q_monomial * generating_functions(multiplicities(z), em).from_values, order);
  const PowerSeries expected_p = expand(q_monomial * generating_functions(power_sums(z), ep).from_values, order);
  for (const auto& [label, got, want] : {std::tuple{"m", &t.m, &expected_m}, std::tuple{"p", &t.p, &expected_p}}) {
    const long k = got->first_difference(*want);
    if (k >= 0) {
      report.record_mismatch(std::string(label) + " coefficient of q^" + std::to_string(k),
                             (*got)[static_cast<std::size_t>(k)].get_str(),
                             (*want)[static_cast<std::size_t>(k)].get_str());
    }
  }
  return report;
}

IdentityReport verify_prop8(const ZetaProduct& z, const DirichletSeries& G) {
  const Int n = z.conductor();
  const std::size_t N = G.order();
  IdentityReport report("G-weighted phi_s identities " + z.to_string());
  const EvenFunction m = multiplicities(z);
  const EvenFunction p = power_sums(z);
  const Rational inv_n = make_rational(1, n);

  // phi_{-s}(d) = sum_{j|d} mu(d/j) j^{-s};  phi_{2-s}(d) = sum_{j|d} mu(d/j) j^2 j^{-s}.
  std::map<Int, Rational> xm, xp, em, ep;
  for (Int d : z.divisors()) {
    for (Int j : cyclo::divisors(d)) {
      const int mu = cyclo::mobius(d / j);
      if (mu == 0) continue;
      xm[j] += m(n / d) * mu;
      xp[j] += p(n / d) * int_rational(mu * j * j) * inv_n;
    }
    em[d] = int_rational(z.exponent(d));
    ep[d] = int_rational(d * z.exponent(n / d));
  }
  const DirichletSeries Xm = DirichletSeries::finite(N, xm);
  const DirichletSeries Xp = DirichletSeries::finite(N, xp);

  IdentityReport restated("divisor-supported sides");
  compare_series(restated, "sum m(n/d) phi_{-s}(d) vs sum e(d) d^{-s}", Xm, DirichletSeries::finite(N, em));
  compare_series(restated, "(1/n) sum p(n/d) phi_{2-s}(d) vs sum d e(n/d) d^{-s}", Xp,
                 DirichletSeries::finite(N, ep));
  report.add_child(std::move(restated));

  const GTransforms t = g_transforms(z, G);
  IdentityReport lines("coefficientwise with G");
  compare_series(lines, "m*_G", G * Xm, t.m_star);
  compare_series(lines, "p*_G", G * Xp, t.p_star);
  report.add_child(std::move(lines));
  return report;
}

IdentityReport verify_prop9(const ZetaProduct& z, const DirichletSeries& G1, const DirichletSeries& G2) {
  IdentityReport report("G1/G2 transition " + z.to_string());
  const DirichletSeries lhs = G2 * g_transforms(z, G1).m.shift();
  const DirichletSeries rhs = G1.shift() * g_transforms(z, G2).p_star;
  compare_series(report, "G2 * shift(m_G1) vs shift(G1) * p*_G2", lhs, rhs);
  return report;
}

ExampleSetup example_setup(int index, Int n, Int r, std::size_t N) {
  using DS = DirichletSeries;
  if (r < 1) throw std::invalid_argument("example parameter r must be >= 1");
  ExampleSetup s;
  s.index = index;
  const DS zeta = DS::zeta(N);
  const DS mu = DS::mobius(N);
  const DS squarefree = zeta * DS::zeta_rs(2, N).inverse();  // zeta(s)/zeta(2s)
  const auto phi = named_function("euler_phi");
  const auto lambda = named_function("liouville");

  switch (index) {
    case 1:
      s.description = "G1 = G2 = zeta(s)";
      s.G1 = zeta;
      s.G2 = zeta;
      s.g1_is_zeta = s.g2_is_zeta = true;
      s.H = phi.evaluator;
      s.H_name = "euler_phi";
      break;
    case 2: {
      s.description = "G1 = sum_{d|r} d^{-s}, G2 = zeta(s)";
      std::map<Int, Rational> terms;
      for (Int d : cyclo::divisors(r)) terms[d] = 1;
      s.G1 = DS::finite(N, terms);
      s.G2 = zeta;
      s.g2_is_zeta = true;
      s.H = [r](Int k) { return Rational(static_cast<long>(ramanujan_sum(k, r))); };
      s.H_name = "c_k(r)";
      s.uses_r = true;
      break;
    }
    case 3:
      s.description = "G1 = zeta(s), G2 = 1/zeta(rs)";
      s.G1 = zeta;
      s.G2 = DS::zeta_rs(r, N).inverse();
      s.g1_is_zeta = true;
      s.H = named_function("rho", {r}).evaluator;
      s.H_name = "rho_r";
      s.uses_r = true;
      break;
    case 4:
      s.description = "G1 = zeta(s), G2 = zeta(rs)";
      s.G1 = zeta;
      s.G2 = DS::zeta_rs(r, N);
      s.g1_is_zeta = true;
      s.H = named_function("klee", {r}).evaluator;
      s.H_name = "klee_r";
      s.uses_r = true;
      break;
    case 5:
      s.description = "G1 = zeta(s), G2 = zeta(s)/zeta(2s)";
      s.G1 = zeta;
      s.G2 = squarefree;
      s.g1_is_zeta = true;
      s.H = named_function("beta").evaluator;
      s.H_name = "beta";
      break;
    case 6:
      s.description = "G1 = zeta(s), G2 = zeta(2s)/zeta(s)";
      s.G1 = zeta;
      s.G2 = DS::zeta_rs(2, N) * mu;
      s.g1_is_zeta = true;
      s.H = named_function("dedekind_psi").evaluator;
      s.H_name = "dedekind_psi";
      break;
    case 7:
      s.description = "G1 = G2 = zeta(2s)/zeta(s)";
      s.G1 = DS::zeta_rs(2, N) * mu;
      s.G2 = s.G1;
      s.H = [phi, lambda](Int k) -> Rational { return lambda(k) * phi(k); };
      s.H_name = "liouville*euler_phi";
      break;
    case 8: {
      s.description = "G1 = zeta(2rs)/zeta(rs), G2 = zeta(s)/zeta(2s)";
      s.G1 = DS::zeta_rs(2 * r, N) * DS::zeta_rs(r, N).inverse();
      s.G2 = squarefree;
      const auto rho_prime = named_function("rho_prime", {r});
      s.H = [rho_prime, lambda](Int k) -> Rational { return lambda(k) * rho_prime(k); };
      s.H_name = "liouville*rho_prime_r";
      s.uses_r = true;
      break;
    }
    case 9: {
      s.description = "G1 = sum_{d|n} (r,d)^{s+1} mu(n/d) d^{-s}, G2 = 1/zeta(s)";
      // (r,d)^{s+1} d^{-s} = (r,d) (d/(r,d))^{-s}
      std::map<Int, Rational> terms;
      for (Int d : cyclo::divisors(n)) {
        const Int g = gcd(r, d);
        terms[d / g] += int_rational(g * cyclo::mobius(n / d));
      }
      s.G1 = DS::finite(N, terms);
      s.G2 = mu;
      s.H = [n, r](Int k) { return Rational(static_cast<long>(ramanujan_sum(n, r * k))); };
      s.H_name = "c_n(rk)";
      s.uses_r = true;
      break;
    }
    case 10: {
      s.description = "G1 = sum_{d|n} lambda(d) mu(n/d) d^{-s}, G2 = zeta(s)/zeta(2s)";
      std::map<Int, Rational> terms;
      for (Int d : cyclo::divisors(n)) terms[d] = lambda(d) * cyclo::mobius(n / d);
      s.G1 = DS::finite(N, terms);
      s.G2 = squarefree;
      s.H = [n, lambda](Int k) -> Rational { return lambda(k) * static_cast<long>(ramanujan_sum(n, k)); };
      s.H_name = "liouville*c_n(k)";
      break;
    }
    case 11:
      s.description = "G1 = 2^{-s} - 1, G2 = 1/zeta(s)";
      s.G1 = DS::finite(N, {{1, Rational(-1)}, {2, Rational(1)}});
      s.G2 = mu;
      s.H = [](Int k) { return Rational(k % 2 == 0 ? 1 : -1); };
      s.H_name = "(-1)^k";
      break;
    case 12:
      s.description = "G1 = zeta(s)(1 - 2^{-s}), G2 = 1 - 2^{-s}";
      s.G1 = DS::generate(N, [](Int k) { return Rational(k % 2 == 1 ? 1 : 0); });
      s.G2 = DS::finite(N, {{1, Rational(1)}, {2, Rational(-1)}});
      s.H = named_function("largest_odd").evaluator;
      s.H_name = "largest_odd";
      break;
    default:
      throw std::invalid_argument("example index must be in 1..12");
  }
  return s;
}

nlohmann::json ExampleResult::to_json() const {
  nlohmann::json params = nlohmann::json::object();
  if (r) params["r"] = *r;
  nlohmann::json mismatch = nullptr;
  if (first_mismatch) mismatch = {{"k", first_mismatch->k}, {"lhs", first_mismatch->lhs}, {"rhs", first_mismatch->rhs}};
  return {{"example", example}, {"n", n},         {"params", params}, {"order", order},
          {"status", to_string(status())}, {"first_mismatch", mismatch}};
}

ExampleResult example_identity(int index, const ZetaProduct& z, Int r, std::size_t N) {
  const ExampleSetup s = example_setup(index, z.conductor(), r, N);
  ExampleResult result;
  result.example = index;
  result.n = z.conductor();
  if (s.uses_r) result.r = r;
  result.order = N;
  result.report = IdentityReport("example " + std::to_string(index) + " " + z.to_string() +
                                 (s.uses_r ? " r=" + std::to_string(r) : ""));

  const DirichletSeries H = DirichletSeries::generate(N, s.H);
  DirichletSeries m_g1 = g_transforms(z, s.G1).m;
  DirichletSeries pstar_g2 = g_transforms(z, s.G2).p_star;
  if (s.g1_is_zeta || s.g2_is_zeta) {
    IdentityReport periodic("zeta transforms equal the periodic functions");
    if (s.g1_is_zeta) {
      const DirichletSeries m = series_of(multiplicities(z), N);
      compare_series(periodic, "m_zeta vs m", m_g1, m);
      m_g1 = m;
    }
    if (s.g2_is_zeta) {
      const DirichletSeries p_star = series_of(star_functions(z).p_star, N);
      compare_series(periodic, "p*_zeta vs p*", pstar_g2, p_star);
      pstar_g2 = p_star;
    }
    result.report.add_child(std::move(periodic));
  }

  IdentityReport series("G1(s-1)/G2(s) = sum " + s.H_name + "(k) k^{-s}");
  compare_series(series, "coefficient", s.G1.shift() * s.G2.inverse(), H);
  result.report.add_child(std::move(series));

  IdentityReport displayed("k m_G1(k) = sum_{d|k} " + s.H_name + "(k/d) p*_G2(d)");
  const DirichletSeries lhs = m_g1.shift();
  const DirichletSeries rhs = H * pstar_g2;
  if (const Int k = compare_series(displayed, "k", lhs, rhs); k != 0) {
    result.first_mismatch = ExampleMismatch{k, lhs[k].get_str(), rhs[k].get_str()};
  }
  result.report.add_child(std::move(displayed));

  if (index == 1) {
    IdentityReport second("p*(k) = sum_{d|k} phi_inv(k/d) d m(d)");
    const DirichletSeries phi_inv = series_of(named_function("phi_inv"), N);
    const DirichletSeries rhs2 = phi_inv * series_of(multiplicities(z), N).shift();
    const DirichletSeries lhs2 = series_of(star_functions(z).p_star, N);
    if (const Int k = compare_series(second, "k", lhs2, rhs2); k != 0 && !result.first_mismatch) {
      result.first_mismatch = ExampleMismatch{k, lhs2[k].get_str(), rhs2[k].get_str()};
    }
    result.report.add_child(std::move(second));
  }
  return result;
}

IdentityReport verify_zeta_multiplication(const DivisorMap& e, std::size_t order) {
  IdentityReport report("zeta(s) sum e(d) d^{-s} = sum a(k) k^{-s}, n=" + std::to_string(e.conductor()));
  std::map<Int, Rational> terms;
  for (Int d : e.divisors()) terms[d] = e.at(d);
  compare_series(report, "coefficient", DirichletSeries::zeta(order) * DirichletSeries::finite(order, terms),
                 series_of(even_extension(e), order));
  return report;
}

IdentityReport verify_fourier_dirichlet(const EvenFunction& a, std::size_t order) {
  const Int n = a.conductor();
  IdentityReport report("Dirichlet series of a Ramanujan pair, n=" + std::to_string(n));
  const EvenFunction r = ramanujan_coefficients(a);
  const Rational inv_n = make_rational(1, n);
  std::map<Int, Rational> y, y_dual;
  for (Int d : cyclo::divisors(n)) {
    for (Int j : cyclo::divisors(d)) {
      const int mu = cyclo::mobius(d / j);
      if (mu == 0) continue;
      y[j] += r(n / d) * int_rational(mu * j);
      y_dual[j] += a(n / d) * int_rational(mu * j) * inv_n;
    }
  }
  const DirichletSeries zeta = DirichletSeries::zeta(order);
  compare_series(report, "sum a(k) k^{-s}", zeta * DirichletSeries::finite(order, y), series_of(a, order));
  compare_series(report, "sum r(k) k^{-s}", zeta * DirichletSeries::finite(order, y_dual), series_of(r, order));
  return report;
}

IdentityReport verify_holder(Int r_max, std::size_t order) {
  IdentityReport report("sum_{d|r} d^{1-s} / zeta(s) = sum c_k(r) k^{-s}");
  const DirichletSeries mu = DirichletSeries::mobius(order);
  for (Int r = 1; r <= r_max; ++r) {
    std::map<Int, Rational> terms;
    for (Int d : cyclo::divisors(r)) terms[d] = 1;
    const DirichletSeries lhs = DirichletSeries::finite(order, terms).shift() * mu;
    const DirichletSeries rhs =
        DirichletSeries::generate(order, [r](Int k) { return Rational(static_cast<long>(ramanujan_sum(k, r))); });
    compare_series(report, "r=" + std::to_string(r), lhs, rhs);
  }
  return report;
}

}  // namespace cyclo
