#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/arith.hpp"
#include "oracles.hpp"

#include <random>

using namespace cyclo;

TEST_CASE("divisors and factorization") {
  CHECK(divisors(1) == std::vector<Int>{1});
  CHECK(divisors(12) == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(30) == std::vector<Int>{1, 2, 3, 5, 6, 10, 15, 30});
  CHECK(factorize(360) == std::vector<std::pair<Int, int>>{{2, 3}, {3, 2}, {5, 1}});
  for (Int n = 1; n <= 500; ++n) {
    CHECK(divisors(n) == oracle::divisors(n));
    Int back = 1;
    for (auto [p, k] : factorize(n)) back *= ipow(p, static_cast<unsigned>(k));
    CHECK(back == n);
  }
}

TEST_CASE("gcd conventions") {
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(0, -7) == 7);
  CHECK(gcd(-12, 18) == 6);
  CHECK(gcd(0, 0) == 0);
}

TEST_CASE("mobius, totient and phi_s against brute force") {
  for (Int n = 1; n <= 300; ++n) {
    CHECK(mobius(n) == oracle::mobius(n));
    CHECK(euler_phi(n) == oracle::totient(n));
    CHECK(phi_s(n, 1) == Rational(static_cast<long>(oracle::totient(n))));
    CHECK(phi_s(n, 0) == Rational(n == 1 ? 1 : 0));
  }
  CHECK(phi_s(6, 2) == Rational(24));   // Jordan J_2(6)
  CHECK(phi_s(4, -1) == Rational(-1, 4));
}

TEST_CASE("Ramanujan sums against roots of unity") {
  for (Int m = 1; m <= 40; ++m) {
    for (Int l = 0; l <= 45; ++l) {
      CHECK(ramanujan_sum(m, l) == oracle::round_to_int(oracle::ramanujan_numeric(m, l)));
    }
  }
  CHECK(ramanujan_sum(6, 0) == 2);
  CHECK(ramanujan_sum(12, 1) == 0);
  CHECK(ramanujan_sum(9, 3) == -3);
}

TEST_CASE("orthogonality of Ramanujan sums") {
  // sum_{k=1}^{n} c_a(k) c_b(k) = n phi(a) when a = b and 0 otherwise, for a, b | n
  for (Int n : {6, 12, 30}) {
    for (Int a : divisors(n)) {
      for (Int b : divisors(n)) {
        Int s = 0;
        for (Int k = 1; k <= n; ++k) s += ramanujan_sum(a, k) * ramanujan_sum(b, k);
        CHECK(s == (a == b ? n * euler_phi(a) : 0));
      }
    }
  }
}

TEST_CASE("rth powers") {
  CHECK(is_rth_power(1, 5));
  CHECK(is_rth_power(64, 3));
  CHECK(is_rth_power(64, 6));
  CHECK_FALSE(is_rth_power(32, 3));
  CHECK(is_rth_power(49, 2));
  CHECK_FALSE(is_rth_power(50, 2));
}

TEST_CASE("divisor maps reject wrong key sets") {
  CHECK_THROWS_AS(DivisorMap::from_map(6, {{1, Rational(1)}, {2, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(DivisorMap::from_map(4, {{1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)}}),
                  std::invalid_argument);
  const DivisorMap m = DivisorMap::from_map(4, {{1, Rational(1)}, {2, Rational(2)}, {4, Rational(3)}});
  CHECK(m.at(4) == 3);
  CHECK_THROWS_AS(m.at(3), std::out_of_range);
}

TEST_CASE("Moebius transform round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (Int n = 1; n <= 60; ++n) {
    const DivisorMap e = DivisorMap::generate(n, [&](Int) { return Rational(dist(rng)); });
    const DivisorMap o = mobius_transform(e);
    CHECK(inverse_mobius_transform(o) == e);
    CHECK(mobius_transform(inverse_mobius_transform(e)) == e);
    for (Int d : divisors(n)) {
      Rational s;
      for (Int c : divisors(d)) s += e.at(c);
      CHECK(o.at(d) == s);
    }
  }
}

TEST_CASE("named arithmetic functions") {
  const auto f = [](const char* name, std::vector<Int> p = {}) { return named_function(name, p); };
  for (Int k = 1; k <= 60; ++k) {
    CHECK(f("sigma")(k) == Rational(static_cast<long>(oracle::sigma(k))));
    CHECK(f("euler_phi")(k) == Rational(static_cast<long>(oracle::totient(k))));
    CHECK(f("abs_mobius")(k) == Rational(std::abs(oracle::mobius(k))));
  }
  // Dedekind psi(n) = n prod_{p|n} (1 + 1/p)
  CHECK(f("dedekind_psi")(12) == 24);
  CHECK(f("dedekind_psi")(7) == 8);
  CHECK(f("liouville")(12) == -1);
  CHECK(f("liouville")(36) == 1);
  CHECK(f("largest_odd")(48) == 3);
  CHECK(f("phi_inv")(12) == Rational((1 - 2) * (1 - 3)));
  // Klee's function Phi_2(n) = n prod_{p^2 | n} (1 - 1/p^2)
  CHECK(f("klee", {2})(12) == 9);
  CHECK(f("klee", {2})(36) == 24);
  // beta(n) = #{k <= n : gcd(k, n) is a square}
  CHECK(f("beta")(8) == 5);
  CHECK(f("rho", {2})(4) == 4 + 1);
  CHECK(f("rho_prime", {2})(4) == 1 + 4);
  CHECK_THROWS_AS(named_function("nonsense"), std::invalid_argument);
  CHECK_FALSE(named_function_names().empty());
}

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK_THROWS(pow(Rational(0), -1));
  CHECK(to_int(make_rational(10, 2)) == 5);
  CHECK_THROWS_AS(to_int(Rational(1, 2)), std::domain_error);
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
}
