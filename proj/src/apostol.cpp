#include "cyclo/apostol.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace cyclo {

namespace {

std::string render(const RationalFunction& f) {
  std::string s = f.to_string();
  if (s.size() > 240) s = s.substr(0, 240) + "...";
  return s;
}

Rational factorial(Int k) {
  Rational out(1);
  for (Int i = 2; i <= k; ++i) out *= static_cast<long>(i);
  return out;
}

RationalFunction q_power(std::size_t k) { return RationalFunction(Polynomial::monomial(Rational(1), k)); }

/// Taylor coefficients of 1/(q e^t + sign) in t, as rational functions of q.
class ReciprocalSeries {
 public:
  explicit ReciprocalSeries(int sign) : sign_(sign) {}

  const RationalFunction& operator[](std::size_t k) {
    while (coeffs_.size() <= k) extend();
    return coeffs_[k];
  }

 private:
  void extend() {
    // q e^t + sign = (q + sign) + q sum_{j>=1} t^j / j!
    const Polynomial s0 = Polynomial::from_ints({static_cast<Int>(sign_), 1});
    const RationalFunction inv_s0 = RationalFunction::from_coprime(Polynomial::constant(1), s0);
    const std::size_t k = coeffs_.size();
    if (k == 0) {
      coeffs_.push_back(inv_s0);
      return;
    }
    const RationalFunction q(Polynomial::monomial(Rational(1), 1));
    RationalFunction acc;
    for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[k - j] * (1 / factorial(static_cast<Int>(j)));
    coeffs_.push_back(-(q * acc * inv_s0));
  }

  int sign_;
  std::vector<RationalFunction> coeffs_;
};

std::mutex apostol_mutex;

const ApostolPoly& apostol_cached(ApostolFamily family, Int r) {
  if (r < 0) throw std::invalid_argument("Apostol polynomial index must be >= 0");
  static std::map<Int, ApostolPoly> bernoulli, euler;
  static ReciprocalSeries u(-1), v(1);
  std::lock_guard<std::mutex> lock(apostol_mutex);
  auto& cache = family == ApostolFamily::bernoulli ? bernoulli : euler;
  if (auto it = cache.find(r); it != cache.end()) return it->second;
  ApostolPoly p;
  p.family = family;
  p.index = r;
  const Rational rf = factorial(r);
  if (family == ApostolFamily::bernoulli) {
    // t e^{tx} u(t): [t^r] = sum_{j<r} x^j/j! u_{r-1-j}
    for (Int j = 0; j < r; ++j) p.coeffs.push_back(u[static_cast<std::size_t>(r - 1 - j)] * (rf / factorial(j)));
  } else {
    for (Int j = 0; j <= r; ++j) p.coeffs.push_back(v[static_cast<std::size_t>(r - j)] * (2 * rf / factorial(j)));
  }
  while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
  return cache.emplace(r, std::move(p)).first->second;
}

Rational signed_power(Int base, Int r) { return pow(Rational(static_cast<long>(base)), r); }

enum class BlockKind { bernoulli, euler_printed, euler_corrected };

/// The summand of the divisor d in the right-hand sides, memoized since it does not depend on e.
RationalFunction prop2_block(Int n, Int d, Int b, Int c, Int r, BlockKind kind) {
  using Key = std::tuple<Int, Int, Int, Int, Int, int>;
  static std::map<Key, RationalFunction> cache;
  static std::mutex mutex;
  const Key key{n, d, b, c, r, static_cast<int>(kind)};
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const Rational x1 = make_rational(c + b * n, b * d);
  const Rational x0 = make_rational(c, b * d);
  const RationalFunction qn = q_power(static_cast<std::size_t>(n));
  const Rational scale = signed_power(b * d, r);
  const auto D = static_cast<std::size_t>(d);
  RationalFunction out;
  if (kind == BlockKind::bernoulli) {
    const ApostolPoly& B = apostol_bernoulli(r + 1);
    out = (qn * B.evaluate(x1).substitute_power(D) - B.evaluate(x0).substitute_power(D)) *
          (scale / static_cast<long>(r + 1));
  } else {
    const ApostolPoly& E = apostol_euler(r);
    const Rational outer((n / d - 1) % 2 == 0 ? 1 : -1);
    const Rational inner(kind == BlockKind::euler_printed ? -1 : 1);
    out = (qn * E.evaluate(x1).substitute_power(D) * outer + E.evaluate(x0).substitute_power(D) * inner) *
          (scale / 2);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

/// sum_{i=0}^{n/d-1} (+-1)^i (bdi+c)^r q^{di}
Polynomial prop2_inner(Int n, Int d, Int b, Int c, Int r, bool alternating) {
  return weighted_geometric_lhs(n / d - 1, b * d, c, r, alternating).substitute_power(static_cast<std::size_t>(d));
}

IdentityReport prop2_identity(const ZetaProduct& z, Int b, Int c, Int r, bool alternating, BlockKind odd_kind,
                              std::string name) {
  const Int n = z.conductor();
  IdentityReport report(std::move(name));
  const EvenFunction a = even_extension(z.rational_exponents());
  std::vector<Rational> lhs_coeffs(static_cast<std::size_t>(n));
  for (Int k = 0; k < n; ++k) {
    Rational term = a(k) * signed_power(b * k + c, r);
    if (alternating && k % 2 == 1) term = -term;
    lhs_coeffs[static_cast<std::size_t>(k)] = term;
  }
  const RationalFunction lhs(Polynomial(std::move(lhs_coeffs)));

  RationalFunction rhs;
  std::vector<Int> bad_blocks;
  for (Int d : z.divisors()) {
    const Int e = z.exponent(d);
    const bool odd = d % 2 == 1;
    const BlockKind kind = alternating && odd ? odd_kind : BlockKind::bernoulli;
    const RationalFunction block = prop2_block(n, d, b, c, r, kind);
    if (e != 0) rhs += block * Rational(static_cast<long>(e));
    const RationalFunction inner(prop2_inner(n, d, b, c, r, alternating && odd));
    if (block != inner) {
      bad_blocks.push_back(d);
      report.record_mismatch("divisor block d=" + std::to_string(d) + (e == 0 ? " (e(d)=0)" : ""), render(inner),
                             render(block));
    }
  }
  if (lhs != rhs) report.record_mismatch("full sum", render(lhs), render(rhs));
  report.set_detail("failing_blocks", bad_blocks);
  return report;
}

}  // namespace

long ApostolPoly::x_degree() const { return static_cast<long>(coeffs.size()) - 1; }

RationalFunction ApostolPoly::evaluate(const Rational& x) const {
  RationalFunction acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational ApostolPoly::evaluate(const Rational& x, const Rational& q) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->evaluate(q);
  return acc;
}

ApostolPoly ApostolPoly::substitute_power(std::size_t d) const {
  ApostolPoly out = *this;
  for (auto& c : out.coeffs) c = c.substitute_power(d);
  return out;
}

std::string ApostolPoly::to_string() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << '(' << coeffs[j].to_string() << ')';
    if (j >= 1) out << "*x";
    if (j >= 2) out << '^' << j;
  }
  return out.str();
}

const ApostolPoly& apostol_bernoulli(Int r) { return apostol_cached(ApostolFamily::bernoulli, r); }
const ApostolPoly& apostol_euler(Int r) { return apostol_cached(ApostolFamily::euler, r); }

Polynomial weighted_geometric_lhs(Int n, Int b, Int c, Int r, bool alternating) {
  if (n < 0 || r < 0) throw std::invalid_argument("weighted sum needs n >= 0 and r >= 0");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n + 1));
  for (Int i = 0; i <= n; ++i) {
    Rational term = signed_power(b * i + c, r);
    if (alternating && i % 2 == 1) term = -term;
    coeffs[static_cast<std::size_t>(i)] = term;
  }
  return Polynomial(std::move(coeffs));
}

RationalFunction bernoulli_block(Int n, Int b, Int c, Int r) {
  if (b < 1) throw std::invalid_argument("weighted sum needs b >= 1");
  const ApostolPoly& B = apostol_bernoulli(r + 1);
  const Rational x0 = make_rational(c, b);
  const Rational x1 = x0 + static_cast<long>(n + 1);
  return (q_power(static_cast<std::size_t>(n + 1)) * B.evaluate(x1) - B.evaluate(x0)) *
         (signed_power(b, r) / static_cast<long>(r + 1));
}

RationalFunction euler_block(Int n, Int b, Int c, Int r, int sign) {
  if (b < 1) throw std::invalid_argument("weighted sum needs b >= 1");
  const ApostolPoly& E = apostol_euler(r);
  const Rational x0 = make_rational(c, b);
  const Rational x1 = x0 + static_cast<long>(n + 1);
  const Rational outer(n % 2 == 0 ? 1 : -1);
  return (q_power(static_cast<std::size_t>(n + 1)) * E.evaluate(x1) * outer + E.evaluate(x0) * Rational(sign)) *
         (signed_power(b, r) / 2);
}

IdentityReport weighted_geometric_sum(Int n, Int b, Int c, Int r, bool alternating) {
  std::ostringstream name;
  name << (alternating ? "sum (-1)^i (bi+c)^r q^i" : "sum (bi+c)^r q^i") << " n=" << n << " b=" << b << " c=" << c
       << " r=" << r;
  IdentityReport report(name.str());
  const RationalFunction lhs(weighted_geometric_lhs(n, b, c, r, alternating));
  if (!alternating) {
    const RationalFunction rhs = bernoulli_block(n, b, c, r);
    report.expect_equal("closed form", lhs, rhs, render);
    return report;
  }
  IdentityReport printed("with -E_r(c/b,q)");
  printed.expect_equal("closed form", lhs, euler_block(n, b, c, r, -1), render);
  IdentityReport corrected("with +E_r(c/b,q)");
  corrected.expect_equal("closed form", lhs, euler_block(n, b, c, r, 1), render);
  report.add_child(std::move(printed));
  report.add_child(std::move(corrected));
  return report;
}

IdentityReport verify_prop2(const ZetaProduct& z, Int b, Int c, Int r) {
  if (b < 1 || r < 0) throw std::invalid_argument("verify_prop2 needs b >= 1 and r >= 0");
  std::ostringstream name;
  name << "weighted sums of a(k) " << z.to_string() << " b=" << b << " c=" << c << " r=" << r;
  IdentityReport report(name.str());

  const DivisorMap e = z.rational_exponents();
  const GeneratingFunctions gf = generating_functions(even_extension(e), e);
  IdentityReport r0("sum_{k<n} a(k) q^k/(1-q^n) = sum e(d)/(1-q^d) = (1/(1-q)) sum e(d)/[d]_q");
  r0.expect_equal("first equality", gf.from_values, gf.from_e, render);
  r0.expect_equal("second equality", gf.from_e, gf.from_q_integers, render);
  report.add_child(std::move(r0));

  report.add_child(prop2_identity(z, b, c, r, false, BlockKind::bernoulli, "plain"));
  IdentityReport printed =
      prop2_identity(z, b, c, r, true, BlockKind::euler_printed, "alternating, odd blocks with -E_r(c/(bd),q^d)");
  IdentityReport corrected =
      prop2_identity(z, b, c, r, true, BlockKind::euler_corrected, "alternating, odd blocks with +E_r(c/(bd),q^d)");
  if (printed.status() == Status::fail && corrected.status() == Status::pass) {
    printed.add_note("holds with +E_r(c/(bd),q^d) in the odd blocks");
  }
  report.add_child(std::move(printed));
  report.add_child(std::move(corrected));
  return report;
}

}  // namespace cyclo
