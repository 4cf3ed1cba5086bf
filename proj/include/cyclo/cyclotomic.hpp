#pragma once

#include "cyclo/rational_function.hpp"

#include <utility>

namespace cyclo {

/// Phi_n(q) from the Moebius product of binomials q^d - 1 (memoized, thread-safe).
const Polynomial& cyclotomic(Int n);

/// M(q,d) = (1/d) sum_{d'|d} mu(d/d') q^{d'}
Polynomial necklace(Int d);

/// [m]_q = 1 + q + ... + q^{m-1}
Polynomial q_integer(Int m);

/// Largest v with Phi_d^v | p, together with p / Phi_d^v. p must be nonzero.
std::pair<int, Polynomial> cyclotomic_valuation(const Polynomial& p, Int d);

/// Polynomial whose roots are the pairwise products of the roots of f and g,
/// via Res_t(t^m f(q/t), g(t)) evaluated pointwise and interpolated.
/// The result has leading coefficient lc(f)^deg(g) * lc(g)^deg(f); monic inputs give monic output.
Polynomial tensor_product(const Polynomial& f, const Polynomial& g);

/// q f'(q) / f(q)
RationalFunction log_derivative(const RationalFunction& f);

}  // namespace cyclo
