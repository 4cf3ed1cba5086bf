#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/dirichlet.hpp"
#include "cyclo/verify.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

std::vector<Rational> coeffs(const DirichletSeries& s) {
  std::vector<Rational> out(s.order() + 1);
  for (std::size_t k = 1; k <= s.order(); ++k) out[k] = s[static_cast<Int>(k)];
  return out;
}

DirichletSeries random_series(std::mt19937_64& rng, std::size_t N) {
  std::uniform_int_distribution<long> dist(-4, 4);
  DirichletSeries s = DirichletSeries::generate(N, [&](Int) { return Rational(dist(rng)); });
  s[1] = 1;
  return s;
}

}  // namespace

TEST_CASE("convolution against the definition") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    const DirichletSeries a = random_series(rng, 120), b = random_series(rng, 120);
    CHECK(coeffs(a * b) == oracle::convolve(coeffs(a), coeffs(b)));
    CHECK((a * b) == (b * a));
    CHECK(a * a.inverse() == DirichletSeries::unit(120));
  }
}

TEST_CASE("basic series") {
  const std::size_t N = 100;
  CHECK(DirichletSeries::zeta(N) * DirichletSeries::mobius(N) == DirichletSeries::unit(N));
  CHECK(DirichletSeries::zeta(N).inverse() == DirichletSeries::mobius(N));
  // zeta(s-1)/zeta(s) = sum phi(k) k^{-s}
  const DirichletSeries phi = DirichletSeries::zeta(N).shift() * DirichletSeries::mobius(N);
  for (Int k = 1; k <= static_cast<Int>(N); ++k) CHECK(phi[k] == Rational(static_cast<long>(oracle::totient(k))));
  // zeta(s)^2 counts divisors
  const DirichletSeries tau = DirichletSeries::zeta(N) * DirichletSeries::zeta(N);
  CHECK(tau[12] == 6);
  CHECK(DirichletSeries::zeta_rs(2, N)[49] == 1);
  CHECK(DirichletSeries::zeta_rs(2, N)[50] == 0);
  CHECK(DirichletSeries::zeta(N).dilate(3) == DirichletSeries::zeta_rs(3, N));
  CHECK(DirichletSeries::finite(10, {{2, Rational(1)}, {20, Rational(5)}})[2] == 1);
  CHECK(DirichletSeries::zeta(N).first_difference(DirichletSeries::zeta(N)) == 0);
  CHECK(DirichletSeries::zeta(N).first_difference(DirichletSeries::mobius(N)) == 2);
  CHECK_THROWS(DirichletSeries::finite(10, {{2, Rational(1)}}).inverse());
}

TEST_CASE("G-transforms with G = zeta are the periodic functions") {
  std::mt19937_64 rng(2);
  const std::size_t N = 90;
  for (Int n : {1, 6, 12, 30}) {
    const ZetaProduct z = random_zeta(n, rng);
    const GTransforms g = g_transforms(z, DirichletSeries::zeta(N));
    CHECK(g.m == series_of(multiplicities(z), N));
    CHECK(g.p == series_of(power_sums(z), N));
    const StarFunctions star = star_functions(z);
    CHECK(g.m_star == series_of(star.m_star, N));
    CHECK(g.p_star == series_of(star.p_star, N));
  }
}

TEST_CASE("generalized transforms") {
  std::mt19937_64 rng(3);
  const std::size_t N = 120;
  for (Int n : {6, 12, 30}) {
    for (int t = 0; t < 3; ++t) {
      const ZetaProduct z = random_zeta(n, rng);
      const DirichletSeries G = random_series(rng, N), H = random_series(rng, N);
      CHECK(verify_prop8(z, G).status() == Status::pass);
      CHECK(verify_prop8(z, DirichletSeries::mobius(N)).status() == Status::pass);
      CHECK(verify_prop9(z, G, H).status() == Status::pass);
      CHECK(verify_prop9(z, DirichletSeries::zeta(N), DirichletSeries::zeta(N)).status() == Status::pass);
      CHECK(verify_zeta_multiplication(z.rational_exponents(), N).status() == Status::pass);
      CHECK(verify_fourier_dirichlet(random_even_function(n, rng), N).status() == Status::pass);
      CHECK(verify_ps_g_geometric(z, 40).status() == Status::pass);
    }
  }
  CHECK(verify_holder(12, N).status() == Status::pass);
}

TEST_CASE("closed forms of the example quotients against brute force") {
  const std::size_t N = 60;
  const auto quotient = [&](int index, Int n, Int r) {
    const ExampleSetup s = example_setup(index, n, r, N);
    return oracle::convolve(coeffs(s.G1.shift()), coeffs(s.G2.inverse()));
  };
  // Example 1: phi; Example 4: Jordan-type Klee function; Example 12: largest odd divisor.
  for (Int k = 1; k <= static_cast<Int>(N); ++k) {
    CHECK(quotient(1, 6, 1)[k] == Rational(static_cast<long>(oracle::totient(k))));
    Int odd = k;
    while (odd % 2 == 0) odd /= 2;
    CHECK(quotient(12, 6, 1)[k] == Rational(static_cast<long>(odd)));
    CHECK(quotient(11, 6, 1)[k] == Rational(k % 2 == 0 ? 1 : -1));
    // Example 2 with r = 6: the Ramanujan sum c_k(6)
    CHECK(quotient(2, 6, 6)[k] == Rational(static_cast<long>(oracle::round_to_int(oracle::ramanujan_numeric(k, 6)))));
  }
}

TEST_CASE("Example 1 on A_2") {
  const ZetaProduct z = ZetaProduct::parse("n=3; e={1:-1,3:1}");
  const EvenFunction m = multiplicities(z);
  const EvenFunction ps = star_functions(z).p_star;
  // 3 m(3) = 0 = phi(3) p*(1) + phi(1) p*(3)
  CHECK(m(3) * 3 == 0);
  CHECK(Rational(2) * ps(1) + ps(3) == 0);
  const ExampleResult r = example_identity(1, z, 1, 200);
  CHECK(r.status() == Status::pass);
  CHECK_FALSE(r.first_mismatch);
}

TEST_CASE("examples hold coefficientwise") {
  std::mt19937_64 rng(4);
  for (int index = 1; index <= 12; ++index) {
    for (Int n : {6, 12, 30}) {
      for (Int r : {1, 3}) {
        const ExampleResult res = example_identity(index, random_zeta(n, rng), r, 120);
        CHECK_MESSAGE(res.status() == Status::pass, "example " << index << " n=" << n << " r=" << r);
      }
    }
  }
}

TEST_CASE("Example 8 needs odd r") {
  // With G1 = zeta(2rs)/zeta(rs) and G2 = zeta(s)/zeta(2s), H = lambda * rho'_r holds for odd r only.
  std::mt19937_64 rng(5);
  const ZetaProduct z = random_zeta(6, rng);
  CHECK(example_identity(8, z, 1, 120).status() == Status::pass);
  CHECK(example_identity(8, z, 3, 120).status() == Status::pass);
  const ExampleResult even = example_identity(8, z, 2, 120);
  CHECK(even.status() == Status::fail);
  REQUIRE(even.first_mismatch);
  CHECK(even.first_mismatch->k >= 1);
}

TEST_CASE("example result schema") {
  const ExampleResult r = example_identity(3, ZetaProduct::parse("n=6; e={1:1,2:0,3:-1,6:2}"), 2, 50);
  const nlohmann::json j = r.to_json();
  for (const char* key : {"example", "n", "params", "order", "status", "first_mismatch"}) CHECK(j.contains(key));
  CHECK(j.size() == 6);
  CHECK(j["params"]["r"] == 2);
  CHECK(j["status"] == "pass");
  CHECK(j["first_mismatch"].is_null());
  CHECK_THROWS_AS(example_setup(13, 6, 1, 10), std::invalid_argument);
}
