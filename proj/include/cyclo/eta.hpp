#pragma once

// Truncated q-expansions of q d/dq log eta_bar_e(q), eta_bar_e(q) = prod_{k>=1} zeta_e(q^k).

#include "cyclo/zeta_product.hpp"

#include <utility>

namespace cyclo {

/// sum_{m>=1} sigma(m) q^m, coefficients of q^0..q^{order-1}.
PowerSeries lambert_L(std::size_t order);
/// sum_{k>=1} k q^k / (1 - q^k), expanded term by term.
PowerSeries lambert_L_from_quotients(std::size_t order);

struct EtaExpansion {
  std::size_t order = 0;
  Int mu_e = 0;                  // exponent of the q^{-mu_e/24} prefactor, not expanded
  PowerSeries direct;            // log-derivative of the expanded product of (1 - q^{kd})^{e(d)}
  PowerSeries divisor_form;      // sum_{d|n} d e(d) L(q^d)
  PowerSeries cyclotomic_form;   // sum_{d|n} m(n/d) sum_k k q^k Phi_d'(q^k) / Phi_d(q^k)
  PowerSeries ramanujan_form;    // sum_{d|n} m(n/d) sum_k (sum_{j<=d} c_d(j) q^{kj}) / (q^{kd} - 1)
  PowerSeries ramanujan_form_k;  // the same with the summand multiplied by k
};

EtaExpansion eta_log_derivative(const ZetaProduct& z, std::size_t order);

/// Relation between the direct expansion and sum d e(d) L(q^d): 1 if equal, -1 if
/// opposite, 0 otherwise. Zero expansions count as equal.
int eta_sign(const EtaExpansion& x);

/// Compares every form with the direct expansion. The divisor form is compared up to
/// the global sign, which is recorded in the "sign" detail but not flagged here.
IdentityReport verify_eta(const ZetaProduct& z, std::size_t order);

/// verify_eta for each named product, with the sign discrepancy of the divisor form
/// raised as a single flag when it occurs.
IdentityReport verify_eta_all(const std::vector<std::pair<std::string, ZetaProduct>>& products, std::size_t order);

}  // namespace cyclo
