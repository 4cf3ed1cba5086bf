#pragma once

// Seeded verification suites over all modules.

#include "cyclo/report.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cyclo {

class ZetaProduct;
class EvenFunction;

struct SuiteOptions {
  std::uint64_t seed = 42;
  long nmax = 60;
  /// Base count of random instances; the cyclotomic-coherence suite uses 5x, the
  /// Ramanujan round trip 5/2x and the weighted-sum suite x/2.
  int trials = 20;
  std::size_t order = 200;
  std::size_t eta_order = 100;
  /// Restrictions for the example scope.
  std::optional<int> index;
  std::optional<long> n;
  std::optional<long> r;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SuiteItem {
  std::string suite;
  std::string id;
  IdentityReport report;
  /// Extra machine-readable payload (the example schema for example items).
  nlohmann::json payload;
};

struct SuiteResult {
  std::string scope;
  std::vector<SuiteItem> items;

  Status status() const;
  std::vector<std::string> flags() const;
  nlohmann::json to_json() const;
  /// One line per item, with the report tree for anything that is not a pass.
  std::string describe() const;
};

/// "all", "prop", "example", "catalog", "eta" or "weights".
const std::vector<std::string>& suite_scopes();
/// Throws std::invalid_argument for an unknown scope.
SuiteResult run_suite(const std::string& scope, const SuiteOptions& options);

/// Generator for one suite item, seeded from the global seed and the item's tag.
std::mt19937_64 item_rng(std::uint64_t seed, const std::string& tag);
/// Exponents uniform in [lo, hi] on every divisor of n.
ZetaProduct random_zeta(long n, std::mt19937_64& rng, long lo = -2, long hi = 2);
/// Integer values in [lo, hi] at the divisors of n, extended by gcd.
EvenFunction random_even_function(long n, std::mt19937_64& rng, long lo = -5, long hi = 5);

/// prod_{d|n} Phi_d = q^n - 1 and Phi_n = prod (q^d - 1)^{mu(n/d)} as rational functions.
IdentityReport verify_cyclotomic(long n);
/// Cyclotomic exponents of the reduced rational function equal m(n/d), and p is the DFT of m.
IdentityReport verify_coherence(const ZetaProduct& z);
/// r -> a -> r round trip through Ramanujan sums.
IdentityReport verify_ramanujan_round_trip(const EvenFunction& a);
/// (q^d - 1) tensored with itself k times equals (q^d - 1)^{d^{k-1}}.
IdentityReport verify_tensor_power(long d, long k);

}  // namespace cyclo
