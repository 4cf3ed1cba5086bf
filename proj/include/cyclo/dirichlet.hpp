#pragma once

// Truncated Dirichlet series sum_{k=1}^{N} g(k) k^{-s} and the generalized
// multiplicity / power-sum transforms built from them.

#include "cyclo/zeta_product.hpp"

#include <functional>
#include <map>
#include <optional>

namespace cyclo {

class DirichletSeries {
 public:
  DirichletSeries() = default;
  explicit DirichletSeries(std::size_t order) : coeffs_(order + 1) {}

  template <class F>
  static DirichletSeries generate(std::size_t order, F&& f) {
    DirichletSeries out(order);
    for (std::size_t k = 1; k <= order; ++k) out.coeffs_[k] = f(static_cast<Int>(k));
    return out;
  }
  /// Finite sum of c_k k^{-s}; indices beyond `order` are dropped.
  static DirichletSeries finite(std::size_t order, const std::map<Int, Rational>& terms);
  static DirichletSeries unit(std::size_t order);
  static DirichletSeries zeta(std::size_t order);
  /// 1/zeta(s) = sum mu(k) k^{-s}
  static DirichletSeries mobius(std::size_t order);
  /// zeta(r s): coefficient 1 on r-th powers.
  static DirichletSeries zeta_rs(Int r, std::size_t order);

  std::size_t order() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// g(k) for 1 <= k <= order.
  const Rational& operator[](Int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Rational& operator[](Int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  /// Requires g(1) != 0.
  DirichletSeries inverse() const;
  /// G(s) -> G(s-1): coefficients k g(k).
  DirichletSeries shift() const;
  /// G(s) -> G(r s): g moved from k to k^r.
  DirichletSeries dilate(Int r) const;
  DirichletSeries truncated(std::size_t order) const;

  DirichletSeries& operator+=(const DirichletSeries& other);
  DirichletSeries& operator-=(const DirichletSeries& other);
  DirichletSeries& operator*=(const Rational& c);
  friend DirichletSeries operator+(DirichletSeries a, const DirichletSeries& b) { return a += b; }
  friend DirichletSeries operator-(DirichletSeries a, const DirichletSeries& b) { return a -= b; }
  friend DirichletSeries operator*(DirichletSeries a, const Rational& c) { return a *= c; }
  /// Dirichlet convolution, truncated to the smaller order.
  friend DirichletSeries operator*(const DirichletSeries& a, const DirichletSeries& b);

  bool operator==(const DirichletSeries& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const DirichletSeries& other) const { return !(*this == other); }
  /// First k in 1..min order with differing coefficients, or 0.
  Int first_difference(const DirichletSeries& other) const;

  std::string to_string(std::size_t max_terms = 12) const;
  nlohmann::json to_json() const;

 private:
  std::vector<Rational> coeffs_;  // index 0 unused
};

DirichletSeries mul(const DirichletSeries& a, const DirichletSeries& b);
DirichletSeries invert(const DirichletSeries& a);
DirichletSeries shift(const DirichletSeries& a);
DirichletSeries zeta_rs(Int r, std::size_t order);

/// The coefficient sequence of an arithmetic function as a Dirichlet series.
DirichletSeries series_of(const ArithmeticFunction& f, std::size_t order);
/// Periodic extension of an even function to k = 1..order.
DirichletSeries series_of(const EvenFunction& f, std::size_t order);

struct GTransforms {
  DirichletSeries m;       // G(s) sum e(n/d) d^{-s}
  DirichletSeries p;       // G(s) sum d e(d) d^{-s}
  DirichletSeries m_star;  // G(s) sum e(d) d^{-s}
  DirichletSeries p_star;  // G(s) sum d e(n/d) d^{-s}
};
GTransforms g_transforms(const ZetaProduct& z, const DirichletSeries& G);

struct PsGTransforms {
  PowerSeries m;  // (sum g(k) q^k) sum e(n/d)/[d]_q
  PowerSeries p;  // (sum g(k) q^k) sum d e(d)/[d]_q
};
/// g must have zero constant term.
PsGTransforms ps_g_transforms(const ZetaProduct& z, const PowerSeries& g);
/// With g = q/(1-q), compares the power-series transforms with q times the
/// periodic generating functions of m and p.
IdentityReport verify_ps_g_geometric(const ZetaProduct& z, std::size_t order);

/// Coefficient-level check of G(s) sum m(n/d) phi_{-s}(d) = sum m*_G(k) k^{-s}
/// and (1/n) G(s) sum p(n/d) phi_{2-s}(d) = sum p*_G(k) k^{-s}.
IdentityReport verify_prop8(const ZetaProduct& z, const DirichletSeries& G);

/// G2(s) sum k m_{G1}(k) k^{-s} = G1(s-1) sum p*_{G2}(k) k^{-s}, coefficientwise.
IdentityReport verify_prop9(const ZetaProduct& z, const DirichletSeries& G1, const DirichletSeries& G2);

/// Coefficients of G1, G2 and the claimed H for the twelve convolution examples.
struct ExampleSetup {
  int index = 0;
  std::string description;
  DirichletSeries G1;
  DirichletSeries G2;
  bool g1_is_zeta = false;
  bool g2_is_zeta = false;
  /// Closed form claimed for the coefficients of G1(s-1)/G2(s).
  std::function<Rational(Int)> H;
  std::string H_name;
  bool uses_r = false;
};
ExampleSetup example_setup(int index, Int n, Int r, std::size_t order);

struct ExampleMismatch {
  Int k;
  std::string lhs;
  std::string rhs;
};

struct ExampleResult {
  int example = 0;
  Int n = 0;
  std::optional<Int> r;
  std::size_t order = 0;
  IdentityReport report;
  std::optional<ExampleMismatch> first_mismatch;

  Status status() const { return report.status(); }
  /// {example, n, params, order, status, first_mismatch}
  nlohmann::json to_json() const;
};

/// Checks k m_{G1}(k) = sum_{d|k} H(k/d) p*_{G2}(d) for k <= order, plus the
/// underlying series identity G1(s-1)/G2(s) = sum H(k) k^{-s}.
ExampleResult example_identity(int index, const ZetaProduct& z, Int r, std::size_t order);

/// Mobius transform as multiplication by zeta: zeta * (sum e(d) d^{-s}) has coefficients a(k).
IdentityReport verify_zeta_multiplication(const DivisorMap& e, std::size_t order);

/// sum a(k) k^{-s} = zeta(s) sum r(n/d) phi_{1-s}(d) and
/// sum r(k) k^{-s} = (zeta(s)/n) sum a(n/d) phi_{1-s}(d), coefficientwise.
IdentityReport verify_fourier_dirichlet(const EvenFunction& a, std::size_t order);

/// G1(s-1)/zeta(s) with G1 = sum_{d|r} d^{-s} has coefficients c_k(r), for r <= r_max.
IdentityReport verify_holder(Int r_max, std::size_t order);

}  // namespace cyclo
