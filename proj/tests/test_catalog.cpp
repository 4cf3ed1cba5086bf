#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/catalog.hpp"
#include "cyclo/cyclotomic.hpp"

#include <fstream>
#include <set>

using namespace cyclo;

namespace {

const DualPair& pair_of(const std::vector<DualPair>& pairs, const std::string& name) {
  for (const auto& p : pairs) {
    if (p.name == name) return p;
  }
  throw std::runtime_error("missing " + name);
}

std::vector<Int> coxeter_from_m(const CatalogEntry& e) {
  // exponents j with multiplicity m(j), j = 1..n-1
  const EvenFunction m = multiplicities(e.zeta());
  std::vector<Int> out;
  for (Int k = 0; k < e.n; ++k) {
    for (Int c = 0; c < to_int(m(k)); ++c) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("printed lines") {
  CHECK(catalog_get("E8").m_text() ==
        "1/(1-q) - 1/(1-q^2) - 1/(1-q^3) - 1/(1-q^5) + 1/(1-q^6) + 1/(1-q^10) + 1/(1-q^15) - 1/(1-q^30)");
  CHECK(catalog_get("E8").p_text() ==
        "-1/(1-q) + 2/(1-q^2) + 3/(1-q^3) + 5/(1-q^5) - 6/(1-q^6) - 10/(1-q^10) - 15/(1-q^15) + 30/(1-q^30)");
  CHECK(catalog_get("P8").m_text() == "3/(1-q) - 1/(1-q^3)");
  CHECK(catalog_get("P8").p_text() == "-1/(1-q) + 9/(1-q^3)");
  CHECK(catalog_get("X9").p_text() == "-1/(1-q) - 2/(1-q^2) + 8/(1-q^4)");
  CHECK(catalog_get("J10").p_text() == "-1/(1-q) + 2/(1-q^2) + 3/(1-q^4) + 6/(1-q^6)");
  CHECK(catalog_get("Q10").m_text() ==
        "1/(1-q) - 1/(1-q^2) - 1/(1-q^3) + 1/(1-q^6) + 1/(1-q^8) - 1/(1-q^24)");
  CHECK(catalog_get("S12").p_text() == "-1/(1-q) + 13/(1-q^13)");
  CHECK_FALSE(catalog_get("S12").note.empty());
  CHECK(catalog_get("A_4").m_text() == "1/(1-q) - 1/(1-q^5)");
  CHECK(catalog_get("A_4").p_text() == "-1/(1-q) + 5/(1-q^5)");
  CHECK(catalog_get("D_5").m_text() == "1/(1-q) - 1/(1-q^2) + 1/(1-q^4) - 1/(1-q^8)");
  CHECK(catalog_get("D_5").p_text() == "-1/(1-q) + 2/(1-q^2) - 4/(1-q^4) + 8/(1-q^8)");
}

TEST_CASE("lookup") {
  CHECK(catalog_get("e8").name == "E8");
  CHECK(catalog_get("Q_12").name == "Q12");
  CHECK(catalog_get("tilde-E6").name == "P8");
  CHECK(catalog_get("A", {4}).name == "A_4");
  CHECK(catalog_get("D_7").n == 12);
  CHECK_THROWS_AS(catalog_get("E9"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_get("D", {2}), std::invalid_argument);
  CHECK(fixed_entries().size() == 20);
  CHECK(catalog_entries(12).size() == 20 + 12 + 10);
}

TEST_CASE("Milnor numbers of the catalog") {
  const std::map<std::string, Int> expected{{"E6", 6},   {"E7", 7},   {"E8", 8},   {"P8", 8},   {"X9", 9},
                                            {"J10", 10}, {"U12", 12}, {"S12", 12}, {"S11", 11}, {"Q12", 12},
                                            {"Q11", 11}, {"Q10", 10}, {"W13", 13}, {"W12", 12}, {"Z13", 13},
                                            {"Z12", 12}, {"Z11", 11}, {"E14", 14}, {"E13", 13}, {"E12", 12}};
  for (const auto& [name, mu] : expected) {
    // sum_d d e(d) is the degree, and e(1) = -1 removes the trivial eigenvalue
    const ZetaProduct z = catalog_get(name).zeta();
    Int degree = 0;
    for (Int d : z.divisors()) degree += d * z.exponent(d);
    CHECK_MESSAGE(degree == mu, name);
  }
}

TEST_CASE("Coxeter exponents of the simple singularities") {
  for (Int l = 1; l <= 12; ++l) {
    std::vector<Int> expected;
    for (Int j = 1; j <= l; ++j) expected.push_back(j);
    CHECK(coxeter_from_m(family_A(l)) == expected);
  }
  CHECK(coxeter_from_m(catalog_get("E8")) == std::vector<Int>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(coxeter_from_m(catalog_get("E7")) == std::vector<Int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(coxeter_from_m(catalog_get("E6")) == std::vector<Int>{1, 4, 5, 7, 8, 11});
  // D_5: 1, 3, 5, 7 and l - 1 = 4
  CHECK(coxeter_from_m(family_D(5)) == std::vector<Int>{1, 3, 4, 5, 7});
  // D_4 has the exponent 3 twice
  CHECK(coxeter_from_m(family_D(4)) == std::vector<Int>{1, 3, 3, 5});
  // E8's characteristic polynomial is Phi_30
  CHECK(to_rational_function(catalog_get("E8").zeta()) == RationalFunction(cyclotomic(30)));
}

TEST_CASE("consistency with exactly two documented anomalies") {
  const IdentityReport r = verify_catalog(12);
  CHECK(r.status() == Status::flagged);
  const auto flags = r.all_flags();
  REQUIRE(flags.size() == 2);
  bool x9 = false, j10 = false;
  for (const auto& f : flags) {
    x9 = x9 || f.find("X9") != std::string::npos;
    j10 = j10 || f.find("J10") != std::string::npos;
  }
  CHECK(x9);
  CHECK(j10);
  for (const auto& e : catalog_entries(12)) {
    if (e.name == "X9" || e.name == "J10") continue;
    CHECK_MESSAGE(verify_entry(e).status() == Status::pass, e.name);
  }
}

TEST_CASE("a wrong p-line without a documented anomaly fails") {
  CatalogEntry e = catalog_get("E6");
  e.p_terms[0].coef = 1;
  CHECK(verify_entry(e).status() == Status::fail);
}

TEST_CASE("Saito duality reproduces the strange duality") {
  const auto pairs = saito_dual_pairs(12);
  const std::vector<std::pair<std::string, std::string>> dual{{"E12", "E12"}, {"E13", "Z11"}, {"E14", "Q10"},
                                                              {"Z12", "Z12"}, {"Z13", "Q11"}, {"Q12", "Q12"},
                                                              {"W12", "W12"}, {"W13", "S11"}, {"S12", "S12"},
                                                              {"U12", "U12"}, {"E8", "E8"},   {"D_6", "D_6"}};
  for (const auto& [a, b] : dual) {
    const auto& m = pair_of(pairs, a).dual_matches;
    CHECK_MESSAGE(std::find(m.begin(), m.end(), b) != m.end(), a << " -> " << b);
  }
  // the parabolic ones have no dual in the catalog
  CHECK(pair_of(pairs, "P8").dual_matches.empty());
  CHECK(saito_dual_report(12).status() == Status::pass);
}

TEST_CASE("JSON export round trip") {
  const nlohmann::json j = export_catalog(12);
  CHECK(j["version"] == 1);
  const auto loaded = load_catalog(j);
  const auto original = catalog_entries(12);
  REQUIRE(loaded.size() == original.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].name == original[i].name);
    CHECK(loaded[i].m_terms == original[i].m_terms);
    CHECK(loaded[i].p_terms == original[i].p_terms);
    CHECK(loaded[i].known_p_anomalies.size() == original[i].known_p_anomalies.size());
  }
  std::ifstream in(std::string(CYCLO_DATA_DIR) + "/catalog.json");
  REQUIRE(in);
  CHECK(nlohmann::json::parse(in) == j);
}
