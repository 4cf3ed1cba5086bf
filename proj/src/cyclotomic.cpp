#include "cyclo/cyclotomic.hpp"

#include "cyclo/arith.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace cyclo {

const Polynomial& cyclotomic(Int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::mutex mutex;
  static std::map<Int, Polynomial> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  Polynomial num = Polynomial::constant(1);
  Polynomial den = Polynomial::constant(1);
  for (Int d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu == 1) num *= Polynomial::binomial(static_cast<std::size_t>(d));
    if (mu == -1) den *= Polynomial::binomial(static_cast<std::size_t>(d));
  }
  Polynomial phi;
  if (!try_exact_divide(num, den, phi)) {
    throw std::logic_error("cyclotomic(" + std::to_string(n) + "): Moebius product is not a polynomial");
  }
  return cache.emplace(n, std::move(phi)).first->second;
}

Polynomial necklace(Int d) {
  if (d < 1) throw std::invalid_argument("necklace: d must be positive");
  Polynomial out;
  for (Int dp : divisors(d)) {
    const int mu = mobius(d / dp);
    if (mu != 0) out += Polynomial::monomial(make_rational(mu, d), static_cast<std::size_t>(dp));
  }
  return out;
}

Polynomial q_integer(Int m) {
  if (m < 1) throw std::invalid_argument("q_integer: m must be positive");
  return Polynomial(std::vector<Rational>(static_cast<std::size_t>(m), Rational(1)));
}

std::pair<int, Polynomial> cyclotomic_valuation(const Polynomial& p, Int d) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic_valuation of the zero polynomial");
  const Polynomial& phi = cyclotomic(d);
  int v = 0;
  Polynomial rest = p;
  Polynomial q;
  while (rest.degree() >= phi.degree() && try_exact_divide(rest, phi, q)) {
    rest = std::move(q);
    ++v;
  }
  return {v, rest};
}

Polynomial tensor_product(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("tensor_product of the zero polynomial");
  // Zero roots of f contribute zero products.
  const std::size_t k = f.lowest_degree();
  const Polynomial f1 = f.unshifted(k);
  const int m = f1.degree();
  const int dg = g.degree();
  const std::size_t zero_roots = k * static_cast<std::size_t>(dg);
  const Rational scale = pow(f.leading(), dg) * pow(g.leading(), f.degree());
  if (m == 0 || dg == 0) {
    return Polynomial::monomial(scale, zero_roots);
  }
  const auto& fc = f1.coefficients();
  const int degree = m * dg;
  std::vector<Rational> xs, ys;
  xs.reserve(static_cast<std::size_t>(degree) + 1);
  ys.reserve(static_cast<std::size_t>(degree) + 1);
  for (int point = 0; point <= degree; ++point) {
    const Rational q0(point);
    // t^m f(q0/t) has coefficient f_i q0^i at t^{m-i}.
    std::vector<Rational> h(static_cast<std::size_t>(m) + 1);
    Rational power(1);
    for (int i = 0; i <= m; ++i) {
      h[static_cast<std::size_t>(m - i)] = fc[static_cast<std::size_t>(i)] * power;
      power *= q0;
    }
    xs.push_back(q0);
    ys.push_back(resultant(Polynomial(std::move(h)), g));
  }
  Polynomial r = interpolate(xs, ys);
  if (r.degree() != degree) throw std::logic_error("tensor_product: unexpected resultant degree");
  return (r.monic() * scale).shifted(zero_roots);
}

RationalFunction log_derivative(const RationalFunction& f) {
  if (f.is_zero()) throw std::invalid_argument("log_derivative of the zero rational function");
  const Polynomial& n = f.num();
  const Polynomial& d = f.den();
  Polynomial top = (n.derivative() * d - n * d.derivative()).shifted(1);
  return RationalFunction(std::move(top), n * d);
}

}  // namespace cyclo
