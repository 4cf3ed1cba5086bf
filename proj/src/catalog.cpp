#include "cyclo/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace cyclo {

namespace {

using Line = std::vector<std::pair<Int, Int>>;  // (d, coefficient)

std::vector<CatalogTerm> terms_of(const Line& line) {
  std::vector<CatalogTerm> out;
  for (const auto& [d, c] : line) out.push_back({Rational(static_cast<long>(c)), d});
  return out;
}

CatalogEntry make_entry(std::string name, std::string display, Int n, const Line& m, const Line& p,
                        std::string source) {
  CatalogEntry e;
  e.name = std::move(name);
  e.display = std::move(display);
  e.n = n;
  e.m_terms = terms_of(m);
  e.p_terms = terms_of(p);
  e.source = std::move(source);
  return e;
}

const char* const kSimple = "simple-parabolic";
const char* const kExceptional = "exceptional-unimodal";

std::vector<CatalogEntry> build_fixed() {
  std::vector<CatalogEntry> out;
  const auto add = [&out](std::string name, std::string display, Int n, const Line& m, const Line& p,
                          const char* source) {
    out.push_back(make_entry(std::move(name), std::move(display), n, m, p, source));
    return &out.back();
  };
  add("E6", "E6", 12, {{1, 1}, {2, -1}, {3, -1}, {4, 1}, {6, 1}, {12, -1}},
      {{1, -1}, {2, 2}, {3, 3}, {4, -4}, {6, -6}, {12, 12}}, kSimple)
      ->coxeter_exponents = std::vector<Int>{1, 4, 5, 7, 8, 11};
  add("E7", "E7", 18, {{1, 1}, {2, -1}, {3, -1}, {6, 1}, {9, 1}, {18, -1}},
      {{1, -1}, {2, 2}, {3, 3}, {6, -6}, {9, -9}, {18, 18}}, kSimple)
      ->coxeter_exponents = std::vector<Int>{1, 5, 7, 9, 11, 13, 17};
  add("E8", "E8", 30, {{1, 1}, {2, -1}, {3, -1}, {5, -1}, {6, 1}, {10, 1}, {15, 1}, {30, -1}},
      {{1, -1}, {2, 2}, {3, 3}, {5, 5}, {6, -6}, {10, -10}, {15, -15}, {30, 30}}, kSimple)
      ->coxeter_exponents = std::vector<Int>{1, 7, 11, 13, 17, 19, 23, 29};
  add("P8", "tilde E6 = P8", 3, {{1, 3}, {3, -1}}, {{1, -1}, {3, 9}}, kSimple);
  CatalogEntry* x9 = add("X9", "tilde E7 = X9", 4, {{1, 2}, {2, 1}, {4, -1}}, {{1, -1}, {2, -2}, {4, 8}}, kSimple);
  x9->known_p_anomalies.push_back({{Rational(-2), 2}, {Rational(2), 2}});
  CatalogEntry* j10 =
      add("J10", "tilde E8 = J10", 6, {{1, 1}, {2, 1}, {3, 1}, {6, -1}}, {{1, -1}, {2, 2}, {4, 3}, {6, 6}}, kSimple);
  j10->known_p_anomalies.push_back({{Rational(3), 4}, {Rational(3), 3}});

  add("U12", "U12", 12, {{1, 1}, {3, 1}, {4, -1}, {12, -1}}, {{1, -1}, {3, -3}, {4, 4}, {12, 12}}, kExceptional);
  add("S12", "S12", 13, {{1, 1}, {13, -1}}, {{1, -1}, {13, 13}}, kExceptional)->note =
      "the p-line numerator at d=13 is printed as the symbol n; stored as 13";
  add("S11", "S11", 16, {{1, 1}, {2, -1}, {4, 1}, {16, -1}}, {{1, -1}, {4, 4}, {8, -8}, {16, 16}}, kExceptional);
  add("Q12", "Q12", 15, {{1, 1}, {3, -1}, {5, 1}, {15, -1}}, {{1, -1}, {3, 3}, {5, -5}, {15, 15}}, kExceptional);
  add("Q11", "Q11", 18, {{1, 1}, {2, -1}, {6, 1}, {18, -1}}, {{1, -1}, {3, 3}, {9, -9}, {18, 18}}, kExceptional);
  add("Q10", "Q10", 24, {{1, 1}, {2, -1}, {3, -1}, {6, 1}, {8, 1}, {24, -1}},
      {{1, -1}, {3, 3}, {4, 4}, {8, -8}, {12, -12}, {24, 24}}, kExceptional);
  add("W13", "W13", 16, {{1, 1}, {4, -1}, {8, 1}, {16, -1}}, {{1, -1}, {2, 2}, {4, -4}, {16, 16}}, kExceptional);
  add("W12", "W12", 20, {{1, 1}, {2, -1}, {4, 1}, {5, -1}, {10, 1}, {20, -1}},
      {{1, -1}, {2, 2}, {4, -4}, {5, 5}, {10, -10}, {20, 20}}, kExceptional);
  add("Z13", "Z13", 18, {{1, 1}, {3, -1}, {9, 1}, {18, -1}}, {{1, -1}, {2, 2}, {6, -6}, {18, 18}}, kExceptional);
  add("Z12", "Z12", 22, {{1, 1}, {2, -1}, {11, 1}, {22, -1}}, {{1, -1}, {2, 2}, {11, -11}, {22, 22}}, kExceptional);
  add("Z11", "Z11", 30, {{1, 1}, {2, -1}, {3, -1}, {6, 1}, {15, 1}, {30, -1}},
      {{1, -1}, {2, 2}, {5, 5}, {10, -10}, {15, -15}, {30, 30}}, kExceptional);
  add("E14", "E14", 24, {{1, 1}, {3, -1}, {4, -1}, {8, 1}, {12, 1}, {24, -1}},
      {{1, -1}, {2, 2}, {3, 3}, {6, -6}, {8, -8}, {24, 24}}, kExceptional);
  add("E13", "E13", 30, {{1, 1}, {2, -1}, {5, -1}, {10, 1}, {15, 1}, {30, -1}},
      {{1, -1}, {2, 2}, {3, 3}, {6, -6}, {15, -15}, {30, 30}}, kExceptional);
  add("E12", "E12", 42, {{1, 1}, {2, -1}, {3, -1}, {6, 1}, {7, -1}, {14, 1}, {21, 1}, {42, -1}},
      {{1, -1}, {2, 2}, {3, 3}, {6, -6}, {7, 7}, {14, -14}, {21, -21}, {42, 42}}, kExceptional);
  return out;
}

DivisorMap collect(Int n, const std::vector<CatalogTerm>& terms, const std::string& what) {
  DivisorMap out(n, Rational(0));
  for (const auto& t : terms) {
    if (t.d < 1 || n % t.d != 0) {
      throw std::invalid_argument(what + " term at " + std::to_string(t.d) + " is not on a divisor of " +
                                  std::to_string(n));
    }
    out.at(t.d) += t.coef;
  }
  return out;
}

std::string format_term(const CatalogTerm& t, bool first) {
  std::ostringstream out;
  const bool negative = t.coef < 0;
  if (first) {
    if (negative) out << '-';
  } else {
    out << (negative ? " - " : " + ");
  }
  out << Rational(abs(t.coef)).get_str() << "/(1-q";
  if (t.d != 1) out << '^' << t.d;
  out << ')';
  return out.str();
}

nlohmann::json coef_json(const Rational& c) {
  if (is_integer(c) && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

nlohmann::json term_json(const CatalogTerm& t) { return {{"coef", coef_json(t.coef)}, {"d", t.d}}; }

CatalogTerm term_from_json(const nlohmann::json& j) {
  const auto& c = j.at("coef");
  return {c.is_string() ? Rational(c.get<std::string>()) : Rational(c.get<long>()), j.at("d").get<Int>()};
}

// Terms stay in printed order; a line may repeat a denominator (D_3).
nlohmann::json line_json(const std::vector<CatalogTerm>& terms) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : terms) out.push_back(term_json(t));
  return out;
}

std::vector<CatalogTerm> line_from_json(const nlohmann::json& j) {
  std::vector<CatalogTerm> out;
  for (const auto& t : j) out.push_back(term_from_json(t));
  return out;
}

std::string normalize_name(std::string_view name) {
  std::string out;
  for (char ch : name) {
    if (ch == '_' || ch == '-' || ch == ' ' || ch == '~') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

std::map<Int, Rational> grouped(const std::vector<CatalogTerm>& terms) {
  std::map<Int, Rational> out;
  for (const auto& t : terms) out[t.d] += t.coef;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

DivisorMap CatalogEntry::m_line() const { return collect(n, m_terms, name + " m-line"); }
DivisorMap CatalogEntry::p_line() const { return collect(n, p_terms, name + " p-line"); }

ZetaProduct CatalogEntry::zeta() const {
  const DivisorMap m = m_line();
  ExponentMap e(n, 0);
  for (Int d : m.divisors()) {
    const Rational& c = m.at(n / d);
    if (!is_integer(c)) throw std::invalid_argument(name + " m-line has a non-integer coefficient");
    e.at(d) = c.get_num().get_si();
  }
  return ZetaProduct(std::move(e));
}

std::string CatalogEntry::m_text() const { return format_line(m_terms); }
std::string CatalogEntry::p_text() const { return format_line(p_terms); }

nlohmann::json CatalogEntry::to_json() const {
  nlohmann::json out = {{"name", name},       {"display", display},         {"n", n},
                        {"m_line", line_json(m_terms)}, {"p_line", line_json(p_terms)}, {"source", source}};
  if (!note.empty()) out["note"] = note;
  if (!known_p_anomalies.empty()) {
    auto& list = out["known_p_anomalies"] = nlohmann::json::array();
    for (const auto& [stored, expected] : known_p_anomalies) {
      list.push_back({{"stored", term_json(stored)}, {"expected", term_json(expected)}});
    }
  }
  if (coxeter_exponents) out["coxeter_exponents"] = *coxeter_exponents;
  return out;
}

CatalogEntry CatalogEntry::from_json(const nlohmann::json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.display = j.value("display", e.name);
  e.n = j.at("n").get<Int>();
  e.m_terms = line_from_json(j.at("m_line"));
  e.p_terms = line_from_json(j.at("p_line"));
  e.source = j.at("source").get<std::string>();
  e.note = j.value("note", "");
  if (j.contains("known_p_anomalies")) {
    for (const auto& a : j.at("known_p_anomalies")) {
      e.known_p_anomalies.emplace_back(term_from_json(a.at("stored")), term_from_json(a.at("expected")));
    }
  }
  if (j.contains("coxeter_exponents")) e.coxeter_exponents = j.at("coxeter_exponents").get<std::vector<Int>>();
  return e;
}

std::string format_line(const std::vector<CatalogTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) out += format_term(terms[i], i == 0);
  return out;
}

CatalogEntry family_A(Int l) {
  if (l < 1) throw std::invalid_argument("A_l needs l >= 1");
  const Int n = l + 1;
  CatalogEntry e = make_entry("A_" + std::to_string(l), "A_" + std::to_string(l), n, {{1, 1}, {n, -1}},
                              {{1, -1}, {n, n}}, kSimple);
  std::vector<Int> exps;
  for (Int j = 1; j <= l; ++j) exps.push_back(j);
  e.coxeter_exponents = exps;
  return e;
}

CatalogEntry family_D(Int l) {
  if (l < 3) throw std::invalid_argument("D_l needs l >= 3");
  const Int n = 2 * l - 2;
  const Int h = n / 2;
  CatalogEntry e = make_entry("D_" + std::to_string(l), "D_" + std::to_string(l), n,
                              {{1, 1}, {2, -1}, {h, 1}, {n, -1}}, {{1, -1}, {2, 2}, {h, -h}, {n, n}}, kSimple);
  std::vector<Int> exps;
  for (Int j = 1; j <= 2 * l - 3; j += 2) exps.push_back(j);
  exps.push_back(l - 1);
  std::sort(exps.begin(), exps.end());
  e.coxeter_exponents = exps;
  return e;
}

const std::vector<CatalogEntry>& fixed_entries() {
  static const std::vector<CatalogEntry> entries = build_fixed();
  return entries;
}

std::vector<CatalogEntry> catalog_entries(Int family_max) {
  std::vector<CatalogEntry> out = fixed_entries();
  for (Int l = 1; l <= family_max; ++l) out.push_back(family_A(l));
  for (Int l = 3; l <= family_max; ++l) out.push_back(family_D(l));
  return out;
}

CatalogEntry catalog_get(std::string_view name, const std::vector<Int>& params) {
  std::string key = normalize_name(name);
  if (key == "tildee6") key = "p8";
  if (key == "tildee7") key = "x9";
  if (key == "tildee8") key = "j10";
  for (const auto& e : fixed_entries()) {
    if (normalize_name(e.name) == key) {
      if (!params.empty()) throw std::invalid_argument(e.name + " takes no parameters");
      return e;
    }
  }
  if (!key.empty() && (key[0] == 'a' || key[0] == 'd')) {
    std::string rest = key.substr(1);
    if (rest == "l") rest.clear();
    Int l = 0;
    if (rest.empty()) {
      if (params.size() != 1) throw std::invalid_argument(std::string(name) + " needs one parameter l");
      l = params[0];
    } else if (std::all_of(rest.begin(), rest.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }) &&
               rest.size() < 10) {
      if (!params.empty()) throw std::invalid_argument(std::string(name) + " already fixes l");
      l = std::stoll(rest);
    } else {
      throw std::invalid_argument("unknown catalog entry " + std::string(name));
    }
    return key[0] == 'a' ? family_A(l) : family_D(l);
  }
  throw std::invalid_argument("unknown catalog entry " + std::string(name));
}

IdentityReport verify_entry(const CatalogEntry& entry) {
  IdentityReport report(entry.name);
  report.set_detail("n", entry.n);
  if (!entry.note.empty()) report.add_note(entry.note);

  std::optional<ZetaProduct> z;
  IdentityReport mline("m-line");
  try {
    z = entry.zeta();
  } catch (const std::invalid_argument& err) {
    mline.record_mismatch("m-line", err.what(), "integer coefficients on divisors of n");
  }
  report.add_child(std::move(mline));
  if (!z) return report;
  report.set_detail("e", z->to_json()["e"]);

  IdentityReport pline("p-line coefficient at d equals d e(d)");
  std::map<Int, Rational> implied;
  for (Int d : z->divisors()) {
    if (z->exponent(d) != 0) implied[d] = Rational(static_cast<long>(d * z->exponent(d)));
  }
  const std::map<Int, Rational> stored = grouped(entry.p_terms);
  if (stored != implied) {
    std::vector<CatalogTerm> patched = entry.p_terms;
    bool documented = !entry.known_p_anomalies.empty();
    for (const auto& [was, should] : entry.known_p_anomalies) {
      auto it = std::find(patched.begin(), patched.end(), was);
      if (it == patched.end()) {
        documented = false;
        break;
      }
      *it = should;
    }
    if (documented && grouped(patched) == implied) {
      for (const auto& [was, should] : entry.known_p_anomalies) {
        pline.add_flag("stored p term " + format_term(was, true) + " vs recomputed " + format_term(should, true) +
                       ": inconsistent with the m-line");
      }
    } else {
      std::map<Int, Rational> all = stored;
      for (const auto& [d, c] : implied) all.emplace(d, Rational(0));
      for (const auto& [d, c] : all) {
        const auto s = stored.count(d) ? stored.at(d) : Rational(0);
        const auto i = implied.count(d) ? implied.at(d) : Rational(0);
        if (s != i) pline.record_mismatch("coefficient of 1/(1-q^" + std::to_string(d) + ")", s.get_str(), i.get_str());
      }
    }
  }
  report.add_child(std::move(pline));

  IdentityReport dft("power sums of the roots");
  const EvenFunction m = multiplicities(*z);
  const EvenFunction from_roots = dft_power_sums(m);
  dft.expect_equal("p from d e(d) vs DFT of m", power_sums(*z), from_roots,
                   [](const EvenFunction& f) { return f.to_string(); });
  dft.set_detail("p", from_roots.to_json());
  report.add_child(std::move(dft));

  if (entry.coxeter_exponents) {
    IdentityReport cox("sum m(k) q^k vs Coxeter exponents");
    std::vector<Rational> expected(static_cast<std::size_t>(entry.n));
    for (Int j : *entry.coxeter_exponents) expected[static_cast<std::size_t>(j % entry.n)] += 1;
    cox.expect_equal("multiplicities", m.values(), expected, [](const std::vector<Rational>& v) {
      std::string s;
      for (std::size_t k = 0; k < v.size(); ++k) {
        for (Rational c = v[k]; c > 0; c -= 1) s += (s.empty() ? "q^" : " + q^") + std::to_string(k);
        if (v[k] < 0) s += (s.empty() ? "" : " ") + std::string("(negative at ") + std::to_string(k) + ")";
      }
      return s.empty() ? std::string("0") : s;
    });
    report.add_child(std::move(cox));
  }
  return report;
}

IdentityReport verify_catalog(Int family_max) {
  IdentityReport report("catalog");
  for (const auto& entry : catalog_entries(family_max)) report.add_child(verify_entry(entry));
  return report;
}

std::vector<DualPair> saito_dual_pairs(Int family_max) {
  const std::vector<CatalogEntry> entries = catalog_entries(family_max);
  std::vector<std::pair<std::string, ZetaProduct>> zs;
  for (const auto& e : entries) zs.emplace_back(e.name, e.zeta());
  std::vector<DualPair> out;
  for (const auto& [name, z] : zs) {
    DualPair pair{name, saito_transform(z), saito_dual(z), {}, {}};
    for (const auto& [other, w] : zs) {
      if (w == pair.transform) pair.transform_matches.push_back(other);
      if (w == pair.dual) pair.dual_matches.push_back(other);
    }
    out.push_back(std::move(pair));
  }
  return out;
}

IdentityReport saito_dual_report(Int family_max) {
  IdentityReport report("Saito transform and dual over the catalog");
  nlohmann::json table = nlohmann::json::array();
  for (const auto& pair : saito_dual_pairs(family_max)) {
    table.push_back({{"name", pair.name},
                     {"transform", pair.transform.to_string()},
                     {"dual", pair.dual.to_string()},
                     {"transform_matches", pair.transform_matches},
                     {"dual_matches", pair.dual_matches}});
  }
  for (const auto& e : catalog_entries(family_max)) {
    const ZetaProduct z = e.zeta();
    if (saito_transform(saito_transform(z)) != z) {
      report.record_mismatch(e.name + " transform twice", saito_transform(saito_transform(z)).to_string(),
                             z.to_string());
    }
  }
  report.set_detail("pairs", table);
  return report;
}

nlohmann::json export_catalog(Int family_max) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : catalog_entries(family_max)) entries.push_back(e.to_json());
  return {{"version", 1}, {"entries", entries}};
}

std::vector<CatalogEntry> load_catalog(const nlohmann::json& j) {
  if (j.value("version", 0) != 1) throw std::invalid_argument("unsupported catalog version");
  std::vector<CatalogEntry> out;
  for (const auto& e : j.at("entries")) out.push_back(CatalogEntry::from_json(e));
  return out;
}

}  // namespace cyclo
