#pragma once

// Apostol-Bernoulli and Apostol-Euler polynomials with coefficients in Q(q),
// and the weighted divisor sums built from them.

#include "cyclo/zeta_product.hpp"

namespace cyclo {

enum class ApostolFamily { bernoulli, euler };

/// sum_j coeffs[j] x^j with coefficients rational functions of q.
struct ApostolPoly {
  ApostolFamily family = ApostolFamily::bernoulli;
  Int index = 0;
  std::vector<RationalFunction> coeffs;

  /// -1 for the zero polynomial.
  long x_degree() const;
  /// Value at a rational x, as a function of q.
  RationalFunction evaluate(const Rational& x) const;
  /// Value at rational x and q; throws std::domain_error at a pole.
  Rational evaluate(const Rational& x, const Rational& q) const;
  /// q -> q^d in every coefficient.
  ApostolPoly substitute_power(std::size_t d) const;
  std::string to_string() const;
};

/// t e^{tx} / (q e^t - 1) = sum B_r(x,q) t^r / r!
const ApostolPoly& apostol_bernoulli(Int r);
/// 2 e^{tx} / (q e^t + 1) = sum E_r(x,q) t^r / r!
const ApostolPoly& apostol_euler(Int r);

/// sum_{i=0}^{n} (bi+c)^r q^i, or with (-1)^i when alternating.
Polynomial weighted_geometric_lhs(Int n, Int b, Int c, Int r, bool alternating);

/// (b^r/(r+1)) (q^{n+1} B_{r+1}(c/b+n+1, q) - B_{r+1}(c/b, q))
RationalFunction bernoulli_block(Int n, Int b, Int c, Int r);
/// (b^r/2) ((-1)^n q^{n+1} E_r(c/b+n+1, q) + sign * E_r(c/b, q)), sign = -1 as printed.
RationalFunction euler_block(Int n, Int b, Int c, Int r, int sign);

/// Closed forms of the weighted geometric sum. Alternating sums are checked in the printed
/// form (with -E_r(c/b,q)) and with +E_r(c/b,q) as separate child checks.
IdentityReport weighted_geometric_sum(Int n, Int b, Int c, Int r, bool alternating);

/// The r = 0 generating-function identity and the plain and alternating weighted sums of
/// a(k) = sum_{d|(k,n)} e(d), each reported per divisor block.
IdentityReport verify_prop2(const ZetaProduct& z, Int b, Int c, Int r);

}  // namespace cyclo
