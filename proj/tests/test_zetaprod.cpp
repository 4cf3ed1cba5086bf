#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/verify.hpp"
#include "cyclo/zeta_product.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

ZetaProduct from_map(Int n, const std::map<Int, Int>& e) { return ZetaProduct(ExponentMap::from_map(n, e)); }

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("parsing") {
  const ZetaProduct z = ZetaProduct::parse("n=3; e={1:-1,3:1}");
  CHECK(z.conductor() == 3);
  CHECK(z.exponent(1) == -1);
  CHECK(z.exponent(3) == 1);
  CHECK(ZetaProduct::parse("  n = 3 ;e = { 3 : 1 , 1 : -1 }  ") == z);
  CHECK(z.to_string() == "n=3; e={1:-1,3:1}");
  CHECK(ZetaProduct::parse(z.to_string()) == z);
  CHECK(ZetaProduct::from_json(z.to_json()) == z);

  CHECK_THROWS_AS(ZetaProduct::parse("n=3; e={1:-1}"), std::invalid_argument);
  CHECK_THROWS_AS(ZetaProduct::parse("n=3; e={1:-1,2:1,3:1}"), std::invalid_argument);
  CHECK_THROWS_AS(ZetaProduct::parse("n=0; e={}"), std::invalid_argument);
  try {
    ZetaProduct::parse("n=3; e={1:-1,3:x}");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 15);
  }
}

TEST_CASE("A_2 instance") {
  const ZetaProduct z = ZetaProduct::parse("n=3; e={1:-1,3:1}");
  CHECK(multiplicities(z).values() == ints({0, 1, 1}));
  CHECK(power_sums(z).values() == ints({2, -1, -1}));
  CHECK(to_rational_function(z) == RationalFunction(cyclotomic(3)));
  CHECK(z.milnor_number() == 0);
  CHECK(saito_transform(z) == ZetaProduct::parse("n=3; e={1:1,3:-1}"));
  CHECK(saito_dual(z) == z);
}

TEST_CASE("trivial product") {
  const ZetaProduct z = ZetaProduct::parse("n=1; e={1:0}");
  CHECK(multiplicities(z).values() == ints({0}));
  CHECK(power_sums(z).values() == ints({0}));
  CHECK(to_rational_function(z) == RationalFunction::constant(1));
}

TEST_CASE("multiplicities and power sums against the roots") {
  std::mt19937_64 rng(101);
  for (Int n = 1; n <= 36; ++n) {
    for (int t = 0; t < 4; ++t) {
      const auto e = oracle::random_exponents(n, rng);
      const ZetaProduct z = from_map(n, e);
      const EvenFunction m = multiplicities(z), p = power_sums(z);
      for (Int k = 0; k < n; ++k) {
        CHECK(m(k) == Rational(static_cast<long>(oracle::root_multiplicity(n, e, k))));
        CHECK(p(k) == Rational(static_cast<long>(oracle::round_to_int(oracle::power_sum_numeric(e, k)))));
      }
      CHECK(m.is_gcd_dependent());
      CHECK(p == dft_power_sums(m));
      // the multiplicities count every root once: sum_k m(k) = degree
      Rational total;
      for (Int k = 0; k < n; ++k) total += m(k);
      Int degree = 0;
      for (auto [d, v] : e) degree += d * v;
      CHECK(total == Rational(static_cast<long>(degree)));
    }
  }
}

TEST_CASE("Saito transform") {
  std::mt19937_64 rng(5);
  for (Int n = 1; n <= 40; ++n) {
    const ZetaProduct z = random_zeta(n, rng);
    CHECK(saito_transform(saito_transform(z)) == z);
    CHECK(saito_dual(saito_dual(z)) == z);
    const ZetaProduct t = saito_transform(z);
    // m of the transform is m* of the original; p* is the power sum of the transform.
    const StarFunctions star = star_functions(z);
    CHECK(multiplicities(t) == star.m_star);
    CHECK(power_sums(t) == star.p_star);
  }
}

TEST_CASE("cyclotomic factorization of the rational function") {
  std::mt19937_64 rng(8);
  for (Int n = 1; n <= 30; ++n) {
    const ZetaProduct z = random_zeta(n, rng);
    const ExponentMap f = factor_cyclotomic(to_rational_function(z), n);
    CHECK(f == cyclotomic_exponents(z));
    const EvenFunction m = multiplicities(z);
    for (Int d : f.divisors()) CHECK(Rational(static_cast<long>(f.at(d))) == m(n / d));
  }
  CHECK_THROWS_AS(factor_cyclotomic(RationalFunction(Polynomial::from_ints({2, 1})), 4), std::invalid_argument);
}

TEST_CASE("Ramanujan coefficients") {
  std::mt19937_64 rng(9);
  for (Int n = 1; n <= 30; ++n) {
    const EvenFunction a = random_even_function(n, rng);
    const EvenFunction r = ramanujan_coefficients(a);
    CHECK(ramanujan_reconstruct(r) == a);
    // direct expansion a(k) = sum_{d|n} r(n/d) c_d(k)
    for (Int k = 0; k < n; ++k) {
      Rational s;
      for (Int d : oracle::divisors(n)) {
        s += r(n / d) * Rational(static_cast<long>(oracle::round_to_int(oracle::ramanujan_numeric(d, k))));
      }
      CHECK(s == a(k));
    }
  }
  CHECK_THROWS_AS(EvenFunction::from_values(4, ints({1, 2, 3, 4})), std::invalid_argument);
}

TEST_CASE("partial products vanish to order a(k) at the root") {
  const ZetaProduct z = ZetaProduct::parse("n=6; e={1:2,2:-1,3:1,6:1}");
  const DivisorMap e = z.rational_exponents();
  const EvenFunction a = even_extension(e);
  for (Int k : {1, 2, 3, 6}) {
    const RationalFunction f = partial_zeta(z, k);
    // exponent of (q-1) in f equals a(k)
    Rational order;
    for (Int d : divisors(k)) order += e.at(d);
    CHECK(order == a(k));
    int v_num = cyclotomic_valuation(f.num(), 1).first;
    int v_den = cyclotomic_valuation(f.den(), 1).first;
    CHECK(Rational(v_num - v_den) == a(k));
  }
}

TEST_CASE("periodic generating functions") {
  std::mt19937_64 rng(13);
  for (Int n : {1, 4, 6, 12, 30}) {
    const ZetaProduct z = random_zeta(n, rng);
    const DivisorMap e = z.rational_exponents();
    const GeneratingFunctions g = generating_functions(even_extension(e), e);
    CHECK(g.from_values == g.from_e);
    CHECK(g.from_e == g.from_q_integers);
    CHECK(g.shifted_from_values == g.shifted_from_e);
    CHECK(g.shifted_from_e == g.shifted_from_q_integers);
    CHECK(gf_power_series(even_extension(e), e).status() == Status::pass);
  }
}

TEST_CASE("phi_s and Moebius pairings") {
  std::mt19937_64 rng(21);
  for (Int n : {6, 12, 30}) {
    for (int t = 0; t < 5; ++t) {
      const ZetaProduct z = random_zeta(n, rng);
      CHECK(verify_prop3(z, {-2, -1, 0, 1, 2, 3}).status() == Status::pass);
      for (auto p : {PairingPreset::necklace, PairingPreset::log_derivative, PairingPreset::ramanujan_form}) {
        CHECK(verify_mobius_pairing(z, p).status() == Status::pass);
      }
    }
  }
}

TEST_CASE("generalized pair") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (Int n : {1, 6, 12, 30}) {
    const DivisorMap F = DivisorMap::generate(n, [&](Int) { return Rational(dist(rng)); });
    for (Int s = -2; s <= 3; ++s) CHECK(generalized_pair_check(F, s).status() == Status::pass);
  }
}

TEST_CASE("coherence, Ramanujan round trip and tensor reports") {
  std::mt19937_64 rng(23);
  for (Int n = 1; n <= 24; ++n) {
    CHECK(verify_cyclotomic(n).status() == Status::pass);
    CHECK(verify_coherence(random_zeta(n, rng)).status() == Status::pass);
    CHECK(verify_ramanujan_round_trip(random_even_function(n, rng)).status() == Status::pass);
  }
  CHECK(verify_tensor_power(3, 3).status() == Status::pass);
}

TEST_CASE("seeded generators are reproducible") {
  auto a = item_rng(42, "x");
  auto b = item_rng(42, "x");
  auto c = item_rng(42, "y");
  CHECK(a() == b());
  CHECK(a() != c());
  auto r1 = item_rng(1, "t");
  auto r2 = item_rng(1, "t");
  CHECK(random_zeta(12, r1) == random_zeta(12, r2));
}
