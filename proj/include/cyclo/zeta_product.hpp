#pragma once

// Cyclotomic products zeta_e(q) = prod_{d|n} (q^d - 1)^{e(d)} and the even
// functions attached to them.

#include "cyclo/arith.hpp"
#include "cyclo/power_series.hpp"
#include "cyclo/report.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

using ExponentMap = BasicDivisorMap<Int>;

/// Malformed textual input; `position` is a 0-based character offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ZetaProduct {
 public:
  explicit ZetaProduct(ExponentMap e) : e_(std::move(e)) {}
  /// All exponents zero.
  explicit ZetaProduct(Int n) : e_(n, 0) {}

  /// Parses `n=<int>; e={d:v,...}`; whitespace-insensitive, every divisor required.
  static ZetaProduct parse(std::string_view text);
  static ZetaProduct from_json(const nlohmann::json& j);

  Int conductor() const { return e_.conductor(); }
  const ExponentMap& exponents() const { return e_; }
  Int exponent(Int d) const { return e_.at(d); }
  const std::vector<Int>& divisors() const { return e_.divisors(); }
  /// mu_e = sum_{d|n} e(d)
  Int milnor_number() const;
  DivisorMap rational_exponents() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  bool operator==(const ZetaProduct& other) const { return e_ == other.e_; }
  bool operator!=(const ZetaProduct& other) const { return !(*this == other); }

 private:
  ExponentMap e_;
};

/// n-periodic function of k whose value depends only on gcd(k, n).
class EvenFunction {
 public:
  /// Values at k = 0..n-1; throws std::invalid_argument unless they depend only on gcd(k, n).
  static EvenFunction from_values(Int n, std::vector<Rational> values);
  /// Value at k taken as f(gcd(k, n)); even by construction.
  static EvenFunction from_gcd_values(const DivisorMap& f);
  static EvenFunction zero(Int n);

  Int conductor() const { return n_; }
  const std::vector<Rational>& values() const { return values_; }
  /// Value at any integer k (periodic extension).
  const Rational& operator()(Int k) const;
  /// Values at the divisors of n.
  DivisorMap on_divisors() const;
  bool is_gcd_dependent() const;

  std::string to_string() const;
  nlohmann::json to_json() const;

  bool operator==(const EvenFunction& other) const { return n_ == other.n_ && values_ == other.values_; }
  bool operator!=(const EvenFunction& other) const { return !(*this == other); }

 private:
  EvenFunction(Int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {}
  Int n_ = 1;
  std::vector<Rational> values_;
};

/// a(k) = sum_{d | (k,n)} e(d)
EvenFunction even_extension(const DivisorMap& e);

/// m(k) = sum_{d | (k,n)} e(n/d): sign-counted multiplicity of exp(2 pi i k / n).
EvenFunction multiplicities(const ZetaProduct& z);
/// p(k) = sum_{d | (k,n)} d e(d): sign-counted k-th power sum of the roots.
EvenFunction power_sums(const ZetaProduct& z);

/// e(d) -> e(n/d)
ZetaProduct saito_transform(const ZetaProduct& z);
/// e(d) -> -e(n/d)
ZetaProduct saito_dual(const ZetaProduct& z);

struct StarFunctions {
  EvenFunction m_star;  // sum_{d | (k,n)} e(d)
  EvenFunction p_star;  // sum_{d | (k,n)} d e(n/d)
};
StarFunctions star_functions(const ZetaProduct& z);

/// Reduced rational function of zeta_e.
RationalFunction to_rational_function(const ZetaProduct& z);
/// Exponent of Phi_d in zeta_e for every d | n, read off from e (not from a factorization).
ExponentMap cyclotomic_exponents(const ZetaProduct& z);
/// Factors a reduced rational function built from Phi_d, d | n, by repeated exact division.
/// Throws std::invalid_argument if anything other than a constant remains.
ExponentMap factor_cyclotomic(const RationalFunction& f, Int n);

/// r(k) = (1/n) sum_{d|n} a(n/d) c_d(k)
EvenFunction ramanujan_coefficients(const EvenFunction& a);
/// a(k) = sum_{d|n} r(n/d) c_d(k)
EvenFunction ramanujan_reconstruct(const EvenFunction& r);
/// p(l) = sum_{d|n} m(n/d) c_d(l)
EvenFunction dft_power_sums(const EvenFunction& m);

/// prod_{d | (k,n)} (q^d - 1)^{e(d)}; the order of the root q = 1 is a(k).
RationalFunction partial_zeta(const ZetaProduct& z, Int k);

/// Both sides of the periodic generating-function identities for a(k) = sum_{d|(k,n)} e(d).
struct GeneratingFunctions {
  RationalFunction from_values;    // sum_{k=0}^{n-1} a(k) q^k / (1 - q^n)
  RationalFunction from_e;         // sum_{d|n} e(d) / (1 - q^d)
  RationalFunction from_q_integers;  // (1/(1-q)) sum_{d|n} e(d) / [d]_q
  RationalFunction shifted_from_values;    // sum_{k=1}^{n} a(k) q^k / (1 - q^n)
  RationalFunction shifted_from_e;         // sum_{d|n} e(d) q^d / (1 - q^d)
  RationalFunction shifted_from_q_integers;  // (1/(1-q)) sum_{d|n} e(d) q^d / [d]_q
};
GeneratingFunctions generating_functions(const EvenFunction& a, const DivisorMap& e);
IdentityReport gf_power_series(const EvenFunction& a, const DivisorMap& e);

/// Checks sum m(n/d) z_d = sum e(d) x_d and sum p(n/d) z_d = sum (n/d) e(n/d) x_d
/// with z the inverse Moebius transform of x.
IdentityReport verify_mobius_pairing(const ZetaProduct& z, const BasicDivisorMap<RationalFunction>& x);

enum class PairingPreset { necklace, log_derivative, ramanujan_form };
std::string to_string(PairingPreset p);
/// Runs verify_mobius_pairing for the preset x and also checks that the inverse
/// Moebius transform of x equals the preset's closed form z.
IdentityReport verify_mobius_pairing(const ZetaProduct& z, PairingPreset preset);

/// The four phi_s identities (two at s, two after s -> s+1) for each given s.
IdentityReport verify_prop3(const ZetaProduct& z, const std::vector<Int>& s_values);

/// f_s(k) = sum_{d|n} f'_{s+1}(n/d) c_d(k) for all k in 0..n-1, with F(d, n/d) keyed by d.
IdentityReport generalized_pair_check(const DivisorMap& F, Int s);

}  // namespace cyclo
