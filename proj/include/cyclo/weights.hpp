#pragma once

// Quasihomogeneous surface singularities: weight systems (a,b,c;n), spectral
// generating functions and the Seifert-invariant characteristic polynomial.

#include "cyclo/zeta_product.hpp"

#include <utility>

namespace cyclo {

struct WeightSystem {
  Int a = 1, b = 1, c = 1, n = 1;

  /// Parses `a,b,c;n` with positive integers.
  static WeightSystem parse(std::string_view text);
  std::string to_string() const;
  /// (n-a)(n-b)(n-c)/(abc)
  Rational milnor_number() const;
};

struct SeifertData {
  Int g = 0;
  std::vector<std::pair<Int, Int>> pairs;  // (alpha_i, beta_i); beta_i is carried but unused

  /// Parses `g; a1/b1,a2/b2,...`; the list may be empty.
  static SeifertData parse(std::string_view text);
  Int r() const { return static_cast<Int>(pairs.size()); }
  std::string to_string() const;
};

/// Raised when the spectral quotient is not a polynomial with nonnegative integer coefficients.
class NonRegularWeights : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// q^{-n} (q^n-q^a)(q^n-q^b)(q^n-q^c) / ((q^a-1)(q^b-1)(q^c-1)).
Polynomial spectral_gf(const WeightSystem& w);

/// A sum of c_d / (q^d - 1) over divisors d of n, kept both as the rational function and
/// as the coefficient map.
struct PartialFractions {
  RationalFunction gf;
  DivisorMap line;
};

/// sum_{k<n} m(k) q^k / (q^n - 1) from the eight weight terms.
PartialFractions m_gf_from_weights(const WeightSystem& w);
/// sum_{k<n} p(k) q^k / (q^n - 1) from the eight weight terms.
PartialFractions p_gf_from_weights(const WeightSystem& w);
/// (1/zeta(s)) sum m(k) k^{-s}, evaluated term by term at an integer s.
Rational m_dirichlet_from_weights(const WeightSystem& w, Int s);
/// (1/zeta(s)) sum p(k) k^{-s}, evaluated term by term at an integer s.
Rational p_dirichlet_from_weights(const WeightSystem& w, Int s);

/// (1-q^n)^{2g-2+r} prod_{d|n, d in {a,b,c}} (1-q^{n/d}) / ((1-q) prod_{alpha_i|n} (1-q^{n/alpha_i}))
RationalFunction char_poly_from_seifert(const WeightSystem& w, const SeifertData& s);
/// Exponents of q^D - 1 in the same product. The constant (-1)^{sum e} is dropped.
ZetaProduct zeta_from_seifert(const WeightSystem& w, const SeifertData& s);

struct SeifertForms {
  PartialFractions m;  // (2g-2+r)/(q-1) - 1/(q^n-1) + sum_d 1/(q^d-1) - sum_alpha 1/(q^alpha-1)
  PartialFractions p;  // n(2g-2+r)/(q^n-1) - 1/(q-1) + sum_d (n/d)/(q^{n/d}-1) - ...
};
SeifertForms seifert_m_forms(const WeightSystem& w, const SeifertData& s);
/// (1/zeta(s)) sum m(k) k^{-s} from the Seifert data at an integer s.
Rational seifert_m_dirichlet(const WeightSystem& w, const SeifertData& s, Int s_value);
/// (n^{s-1}/zeta(s)) sum p(k) k^{-s} from the Seifert data at an integer s.
Rational seifert_p_dirichlet(const WeightSystem& w, const SeifertData& s, Int s_value);

/// Spectral polynomial properties, DFT and e/p consistency of the weight formulas,
/// reduction of the spectrum mod q^n - 1, and the Dirichlet forms at s = -2..3.
IdentityReport verify_weights(const WeightSystem& w);
/// The Seifert product against its e-vector, and its m/p forms against the periodic functions.
IdentityReport verify_seifert(const WeightSystem& w, const SeifertData& s);

}  // namespace cyclo
