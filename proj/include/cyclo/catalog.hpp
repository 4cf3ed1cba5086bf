#pragma once

// Printed m/p partial-fraction lines of the simple, parabolic and exceptional
// unimodal singularities, with consistency checks.

#include "cyclo/zeta_product.hpp"

#include <optional>

namespace cyclo {

/// coef / (1 - q^d); d need not divide n in a printed line.
struct CatalogTerm {
  Rational coef;
  Int d = 1;
  bool operator==(const CatalogTerm& other) const { return coef == other.coef && d == other.d; }
};

struct CatalogEntry {
  std::string name;     // "A_4", "E8", "Q12", ...
  std::string display;  // "tilde E6 = P8" and similar
  Int n = 1;
  std::vector<CatalogTerm> m_terms;  // sum m(k) q^k / (1 - q^n)
  std::vector<CatalogTerm> p_terms;  // sum p(k) q^k / (1 - q^n)
  std::string source;                // "simple-parabolic" or "exceptional-unimodal"
  std::string note;
  /// p-line terms printed differently from d e(d), together with the value they should have.
  std::vector<std::pair<CatalogTerm, CatalogTerm>> known_p_anomalies;
  /// Coxeter exponents for the simple singularities.
  std::optional<std::vector<Int>> coxeter_exponents;

  /// Coefficients collected per divisor; throws std::invalid_argument on a non-divisor term.
  DivisorMap m_line() const;
  DivisorMap p_line() const;
  /// e(d) = m_line(n/d); throws if a coefficient is not an integer.
  ZetaProduct zeta() const;

  std::string m_text() const;
  std::string p_text() const;
  nlohmann::json to_json() const;
  static CatalogEntry from_json(const nlohmann::json& j);
};

/// "1/(1-q) - 1/(1-q^3)"
std::string format_line(const std::vector<CatalogTerm>& terms);

/// A_l, n = l+1, l >= 1.
CatalogEntry family_A(Int l);
/// D_l, n = 2l-2, l >= 3.
CatalogEntry family_D(Int l);

/// The fixed entries in printed order: E6, E7, E8, P8, X9, J10, then the 14 exceptional ones.
const std::vector<CatalogEntry>& fixed_entries();
/// Fixed entries followed by A_1..A_{family_max} and D_3..D_{family_max}.
std::vector<CatalogEntry> catalog_entries(Int family_max = 12);

/// Lookup by name ("E8", "Q_12", "tilde-E6", "A_4", "A" with params {4}, ...).
/// Throws std::invalid_argument for unknown names or bad family parameters.
CatalogEntry catalog_get(std::string_view name, const std::vector<Int>& params = {});

/// Internal m/p consistency (p coefficient at d equals d e(d)), the power sums by DFT of the
/// multiplicities, and Coxeter exponents where known. Documented p-line anomalies are flagged.
IdentityReport verify_entry(const CatalogEntry& entry);
IdentityReport verify_catalog(Int family_max = 12);

/// For every entry, the catalog entries matching its Saito transform and Saito dual.
struct DualPair {
  std::string name;
  ZetaProduct transform;
  ZetaProduct dual;
  std::vector<std::string> transform_matches;
  std::vector<std::string> dual_matches;
};
std::vector<DualPair> saito_dual_pairs(Int family_max = 12);
/// The pairing table, plus the involution check for every entry.
IdentityReport saito_dual_report(Int family_max = 12);

/// {"version": 1, "entries": [...]}
nlohmann::json export_catalog(Int family_max = 12);
std::vector<CatalogEntry> load_catalog(const nlohmann::json& j);

}  // namespace cyclo
