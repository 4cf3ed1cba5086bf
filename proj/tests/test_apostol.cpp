#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/apostol.hpp"
#include "cyclo/verify.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

const IdentityReport* child(const IdentityReport& r, const std::string& prefix) {
  for (const auto& c : r.children()) {
    if (c.name().rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("Apostol-Bernoulli polynomials against the generating function") {
  for (const Rational& q : {Rational(2), Rational(-3), make_rational(1, 3)}) {
    for (const Rational& x : {Rational(0), make_rational(3, 2), Rational(-2)}) {
      const auto expected = oracle::apostol_bernoulli_values(x, q, 6);
      for (Int r = 0; r <= 6; ++r) CHECK(apostol_bernoulli(r).evaluate(x, q) == expected[r]);
    }
  }
  CHECK(apostol_bernoulli(0).x_degree() == -1);
  CHECK(apostol_bernoulli(3).x_degree() == 2);
  CHECK(apostol_bernoulli(2).family == ApostolFamily::bernoulli);
}

TEST_CASE("Apostol-Euler polynomials against the generating function") {
  for (const Rational& q : {Rational(1), Rational(2), make_rational(-1, 2)}) {
    for (const Rational& x : {Rational(0), make_rational(1, 2), Rational(5)}) {
      const auto expected = oracle::apostol_euler_values(x, q, 6);
      for (Int r = 0; r <= 6; ++r) CHECK(apostol_euler(r).evaluate(x, q) == expected[r]);
    }
  }
  // q = 1 gives the classical Euler polynomials: E_1(x) = x - 1/2, E_2(x) = x^2 - x
  CHECK(apostol_euler(1).evaluate(Rational(3), Rational(1)) == make_rational(5, 2));
  CHECK(apostol_euler(2).evaluate(Rational(3), Rational(1)) == 6);
  CHECK(apostol_euler(4).x_degree() == 4);
}

TEST_CASE("substitution and poles") {
  const ApostolPoly& b = apostol_bernoulli(2);
  CHECK(b.substitute_power(2).evaluate(Rational(1), Rational(3)) == b.evaluate(Rational(1), Rational(9)));
  CHECK_THROWS_AS(b.evaluate(Rational(0), Rational(1)), std::domain_error);
  CHECK_FALSE(b.to_string().empty());
}

TEST_CASE("weighted geometric sums") {
  // sum_{i=0}^{2} (i+1) q^i = 1 + 2q + 3q^2
  CHECK(weighted_geometric_lhs(2, 1, 1, 1, false) == Polynomial::from_ints({1, 2, 3}));
  CHECK(weighted_geometric_lhs(2, 1, 1, 1, true) == Polynomial::from_ints({1, -2, 3}));
  for (auto [b, c] : {std::pair<Int, Int>{1, 0}, {2, 3}, {3, 1}}) {
    for (Int n = 0; n <= 6; ++n) {
      for (Int r = 0; r <= 4; ++r) {
        CHECK(weighted_geometric_sum(n, b, c, r, false).status() == Status::pass);
        const IdentityReport alt = weighted_geometric_sum(n, b, c, r, true);
        const IdentityReport* corrected = child(alt, "with +E_r");
        REQUIRE(corrected);
        CHECK(corrected->status() == Status::pass);
        CHECK(bernoulli_block(n, b, c, r) == RationalFunction(weighted_geometric_lhs(n, b, c, r, false)));
        CHECK(euler_block(n, b, c, r, +1) == RationalFunction(weighted_geometric_lhs(n, b, c, r, true)));
      }
    }
  }
}

TEST_CASE("the alternating closed form as displayed has the wrong sign") {
  // n = 0, r = 0: the sum is 1, while (1/2)(q E_0(1,q) - E_0(0,q)) = (q-1)/(q+1).
  CHECK(euler_block(0, 1, 0, 0, -1) == RationalFunction(Polynomial::from_ints({-1, 1}), Polynomial::from_ints({1, 1})));
  const IdentityReport alt = weighted_geometric_sum(0, 1, 0, 0, true);
  const IdentityReport* printed = child(alt, "with -E_r");
  REQUIRE(printed);
  CHECK(printed->status() == Status::fail);
}

TEST_CASE("weighted sums of a(k)") {
  std::mt19937_64 rng(77);
  for (Int n : {6, 12}) {
    for (auto [b, c] : {std::pair<Int, Int>{1, 0}, {2, 3}}) {
      for (Int r = 0; r <= 3; ++r) {
        const ZetaProduct z = random_zeta(n, rng);
        const IdentityReport rep = verify_prop2(z, b, c, r);
        const IdentityReport* plain = child(rep, "plain");
        const IdentityReport* corrected = child(rep, "alternating, odd blocks with +E_r");
        REQUIRE(plain);
        REQUIRE(corrected);
        CHECK(plain->status() == Status::pass);
        CHECK(corrected->status() == Status::pass);
        CHECK(rep.children().front().status() == Status::pass);
      }
    }
  }
}

TEST_CASE("plain weighted sum by brute force at a rational point") {
  // sum_{k=0}^{n-1} (bk+c)^r a(k) q^k evaluated at q = 1/2 straight from a(k)
  const ZetaProduct z = ZetaProduct::parse("n=6; e={1:1,2:-2,3:1,6:1}");
  const EvenFunction a = even_extension(z.rational_exponents());
  const Int b = 2, c = 3, r = 2;
  Rational direct;
  Rational qk = 1;
  for (Int k = 0; k < 6; ++k) {
    direct += pow(Rational(b * k + c), r) * a(k) * qk;
    qk /= 2;
  }
  // the same sum regrouped by divisor blocks: a(k) = sum_{d | (k,n)} e(d)
  Rational blocks;
  for (Int d : divisors(6)) {
    const Polynomial lhs = weighted_geometric_lhs(6 / d - 1, b * d, c, r, false).substitute_power(static_cast<std::size_t>(d));
    blocks += z.rational_exponents().at(d) * lhs.evaluate(make_rational(1, 2));
  }
  CHECK(direct == blocks);
  CHECK(verify_prop2(z, b, c, r).children().size() >= 3);
}
