#pragma once

// Number-theoretic kernel: divisor lattices, classical arithmetic functions,
// Ramanujan sums and Moebius transforms on divisor-indexed data.

#include "cyclo/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclo {

/// Non-negative gcd with the convention gcd(0, n) = |n|.
Int gcd(Int a, Int b);

/// Strictly increasing list of the positive divisors of n (n >= 1).
std::vector<Int> divisors(Int n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<Int, int>> factorize(Int n);

int mobius(Int k);
Int euler_phi(Int k);

/// phi_s(n) = sum_{d|n} mu(n/d) d^s; negative s gives rationals.
Rational phi_s(Int n, Int s);

/// c_m(l) via the divisor form sum_{d | (l,m)} d mu(m/d).
Int ramanujan_sum(Int m, Int l);

/// True when k = j^r for some integer j >= 1.
bool is_rth_power(Int k, Int r);

Int ipow(Int base, unsigned exp);

/// Values indexed by exactly the positive divisors of a conductor n.
template <class T>
class BasicDivisorMap {
 public:
  explicit BasicDivisorMap(Int n, T fill = T{}) : n_(n), divisors_(cyclo::divisors(n)) {
    values_.assign(divisors_.size(), fill);
  }

  template <class F>
  static BasicDivisorMap generate(Int n, F&& f) {
    BasicDivisorMap map(n);
    for (std::size_t i = 0; i < map.divisors_.size(); ++i) map.values_[i] = f(map.divisors_[i]);
    return map;
  }

  /// The key set of `values` must equal the divisor set of n.
  static BasicDivisorMap from_map(Int n, const std::map<Int, T>& values) {
    BasicDivisorMap map(n);
    if (values.size() != map.divisors_.size()) {
      throw std::invalid_argument("divisor map for n=" + std::to_string(n) + " needs exactly " +
                                  std::to_string(map.divisors_.size()) + " entries");
    }
    for (const auto& [d, v] : values) {
      if (d <= 0 || n % d != 0) {
        throw std::invalid_argument(std::to_string(d) + " is not a divisor of " + std::to_string(n));
      }
      map.at(d) = v;
    }
    return map;
  }

  Int conductor() const { return n_; }
  const std::vector<Int>& divisors() const { return divisors_; }
  const std::vector<T>& values() const { return values_; }
  std::size_t size() const { return divisors_.size(); }

  bool contains(Int d) const {
    return std::binary_search(divisors_.begin(), divisors_.end(), d);
  }

  std::size_t index_of(Int d) const {
    auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
    if (it == divisors_.end() || *it != d) {
      throw std::out_of_range(std::to_string(d) + " is not a divisor of " + std::to_string(n_));
    }
    return static_cast<std::size_t>(it - divisors_.begin());
  }

  const T& at(Int d) const { return values_[index_of(d)]; }
  T& at(Int d) { return values_[index_of(d)]; }

  const T& value_at_index(std::size_t i) const { return values_[i]; }
  T& value_at_index(std::size_t i) { return values_[i]; }

  bool operator==(const BasicDivisorMap& other) const {
    return n_ == other.n_ && values_ == other.values_;
  }

 private:
  Int n_;
  std::vector<Int> divisors_;
  std::vector<T> values_;
};

using DivisorMap = BasicDivisorMap<Rational>;

/// o(d) = sum_{d' | d} e(d') for every divisor d of n.
template <class T>
BasicDivisorMap<T> mobius_transform(const BasicDivisorMap<T>& e) {
  const auto& divs = e.divisors();
  BasicDivisorMap<T> out = e;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    T acc{};
    for (std::size_t j = 0; j <= i; ++j) {
      if (divs[i] % divs[j] == 0) acc += e.value_at_index(j);
    }
    out.value_at_index(i) = acc;
  }
  return out;
}

/// z_d = sum_{d' | d} mu(d/d') x_{d'}; inverse of mobius_transform.
template <class T>
BasicDivisorMap<T> inverse_mobius_transform(const BasicDivisorMap<T>& x) {
  const auto& divs = x.divisors();
  BasicDivisorMap<T> out = x;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    T acc{};
    for (std::size_t j = 0; j <= i; ++j) {
      if (divs[i] % divs[j] != 0) continue;
      const int mu = mobius(divs[i] / divs[j]);
      if (mu == 1) acc += x.value_at_index(j);
      if (mu == -1) acc -= x.value_at_index(j);
    }
    out.value_at_index(i) = acc;
  }
  return out;
}

std::string to_string(const DivisorMap& map);

/// A total map from positive integers to rationals, with a name for reports.
struct ArithmeticFunction {
  std::string name;
  std::vector<Int> params;
  std::function<Rational(Int)> evaluator;

  Rational operator()(Int k) const;
};

/// Builds one of the named functions used by the Dirichlet-series checks:
/// mobius, euler_phi, phi_inv, liouville, dedekind_psi, klee(r), rho(r),
/// rho_prime(r), beta, largest_odd, sigma, abs_mobius.
/// Every evaluator is a direct definitional loop (no multiplicativity).
ArithmeticFunction named_function(std::string_view name, const std::vector<Int>& params = {});

const std::vector<std::string>& named_function_names();

}  // namespace cyclo
