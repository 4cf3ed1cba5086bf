#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/catalog.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/weights.hpp"

using namespace cyclo;

namespace {

Polynomial monomials(std::initializer_list<int> exps) {
  Polynomial p;
  for (int e : exps) p += Polynomial::monomial(1, static_cast<std::size_t>(e));
  return p;
}

}  // namespace

TEST_CASE("parsing weight systems and Seifert data") {
  const WeightSystem w = WeightSystem::parse("15,10,6;30");
  CHECK(w.a == 15);
  CHECK(w.n == 30);
  CHECK(WeightSystem::parse(" 1 , 1 , 1 ; 3 ").to_string() == WeightSystem::parse("1,1,1;3").to_string());
  CHECK_THROWS_AS(WeightSystem::parse("1,1;3"), std::invalid_argument);
  CHECK_THROWS_AS(WeightSystem::parse("0,1,1;3"), std::invalid_argument);

  const SeifertData s = SeifertData::parse("0; 2/1,3/1,5/1");
  CHECK(s.g == 0);
  CHECK(s.r() == 3);
  CHECK(s.pairs[2] == std::pair<Int, Int>{5, 1});
  CHECK(SeifertData::parse("1;").r() == 0);
  CHECK_THROWS_AS(SeifertData::parse("0; 2-1"), std::invalid_argument);
}

TEST_CASE("Milnor numbers") {
  CHECK(WeightSystem::parse("1,1,1;3").milnor_number() == 8);
  CHECK(WeightSystem::parse("15,10,6;30").milnor_number() == 8);
  CHECK(WeightSystem::parse("6,4,3;12").milnor_number() == 6);
  CHECK(WeightSystem::parse("9,6,4;18").milnor_number() == 7);
}

TEST_CASE("spectral generating functions") {
  CHECK(spectral_gf(WeightSystem::parse("1,1,1;3")) == Polynomial::from_ints({1, 3, 3, 1}));
  // simple singularities: the exponents are the Coxeter exponents
  CHECK(spectral_gf(WeightSystem::parse("15,10,6;30")) == monomials({1, 7, 11, 13, 17, 19, 23, 29}));
  CHECK(spectral_gf(WeightSystem::parse("6,4,3;12")) == monomials({1, 4, 5, 7, 8, 11}));
  CHECK(spectral_gf(WeightSystem::parse("9,6,4;18")) == monomials({1, 5, 7, 9, 11, 13, 17}));
  // x^2 + y^2 + z^4 = A_3
  CHECK(spectral_gf(WeightSystem::parse("2,2,1;4")) == monomials({1, 2, 3}));
  CHECK_THROWS_AS(spectral_gf(WeightSystem::parse("4,4,3;12")), NonRegularWeights);
  CHECK_THROWS_AS(spectral_gf(WeightSystem::parse("2,3,5;7")), NonRegularWeights);
}

TEST_CASE("(1,1,1;3) reproduces the P8 lines") {
  const WeightSystem w = WeightSystem::parse("1,1,1;3");
  const CatalogEntry p8 = catalog_get("P8");
  const PartialFractions m = m_gf_from_weights(w);
  const PartialFractions p = p_gf_from_weights(w);
  CHECK(m.line == p8.m_line());
  CHECK(p.line == p8.p_line());
  // the weight-side line holds the coefficients of 1/(q^d - 1)
  RationalFunction from_line;
  for (Int d : divisors(3)) {
    from_line += RationalFunction(Polynomial::constant(m.line.at(d)), Polynomial::binomial(static_cast<std::size_t>(d)));
  }
  CHECK(from_line == m.gf);
  // reduction of the spectrum mod q^3 - 1
  const Polynomial sp = spectral_gf(w);
  const Polynomial reduced = divmod(sp, Polynomial::binomial(3)).remainder;
  CHECK(reduced == Polynomial::from_ints({2, 3, 3}));
}

TEST_CASE("weight-system reports") {
  for (const char* text : {"1,1,1;3", "15,10,6;30", "6,4,3;12", "9,6,4;18", "2,2,1;4", "3,2,2;6"}) {
    const IdentityReport r = verify_weights(WeightSystem::parse(text));
    CHECK_MESSAGE(r.status() == Status::pass, text << "\n" << r.describe());
  }
  // E6 and E8 weights give the catalog m-lines
  CHECK(m_gf_from_weights(WeightSystem::parse("6,4,3;12")).line == catalog_get("E6").m_line());
  CHECK(m_gf_from_weights(WeightSystem::parse("15,10,6;30")).line == catalog_get("E8").m_line());
}

TEST_CASE("Dirichlet forms from the weights") {
  const WeightSystem w = WeightSystem::parse("15,10,6;30");
  const CatalogEntry e8 = catalog_get("E8");
  const EvenFunction m = multiplicities(e8.zeta());
  // (1/zeta(s)) sum_{k>=1} m(k) k^{-s} = sum_{d|n} (inverse Moebius of m on divisors)(d) d^{-s}
  for (Int s = -2; s <= 3; ++s) {
    const DivisorMap mm = inverse_mobius_transform(m.on_divisors());
    Rational expected;
    for (Int d : divisors(30)) expected += mm.at(d) * pow(Rational(d), -s);
    CHECK(m_dirichlet_from_weights(w, s) == expected);
  }
}

TEST_CASE("Seifert data of E8") {
  const WeightSystem w = WeightSystem::parse("15,10,6;30");
  const SeifertData s = SeifertData::parse("0; 2/1,3/1,5/1");
  const ZetaProduct z = zeta_from_seifert(w, s);
  CHECK(z == catalog_get("E8").zeta());
  // the E8 characteristic polynomial is Phi_30, up to the dropped constant sign
  const RationalFunction f = char_poly_from_seifert(w, s);
  const bool up_to_sign = f == RationalFunction(cyclotomic(30)) || -f == RationalFunction(cyclotomic(30));
  CHECK(up_to_sign);
  CHECK(to_rational_function(z) == RationalFunction(cyclotomic(30)));
  CHECK(verify_seifert(w, s).status() == Status::pass);
  const SeifertForms forms = seifert_m_forms(w, s);
  CHECK(forms.m.line == catalog_get("E8").m_line());
  CHECK(forms.p.line == catalog_get("E8").p_line());
}
