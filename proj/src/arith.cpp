#include "cyclo/arith.hpp"

#include <cstdlib>
#include <sstream>

namespace cyclo {

namespace {

void require_positive(Int k, const char* what) {
  if (k <= 0) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

int liouville_value(Int k) {
  int total = 0;
  for (const auto& [p, e] : factorize(k)) total += e;
  return total % 2 == 0 ? 1 : -1;
}

/// Largest j with j^r | k.
Int largest_rth_power_divisor(Int k, Int r) {
  Int best = 1;
  for (Int j = 2; ; ++j) {
    Int power = 1;
    bool overflow = false;
    for (Int i = 0; i < r; ++i) {
      if (power > k / j) {
        overflow = true;
        break;
      }
      power *= j;
    }
    if (overflow || power > k) break;
    if (k % power == 0) best = power;
  }
  return best;
}

}  // namespace

Int gcd(Int a, Int b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
  require_positive(n, "factorize");
  std::vector<std::pair<Int, int>> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int mobius(Int k) {
  require_positive(k, "mobius");
  int sign = 1;
  for (const auto& [p, e] : factorize(k)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Int euler_phi(Int k) {
  require_positive(k, "euler_phi");
  Int result = k;
  for (const auto& [p, e] : factorize(k)) result = result / p * (p - 1);
  return result;
}

Rational phi_s(Int n, Int s) {
  require_positive(n, "phi_s");
  Rational total(0);
  for (Int d : divisors(n)) {
    const int mu = mobius(n / d);
    if (mu != 0) total += mu * pow(Rational(static_cast<long>(d)), s);
  }
  return total;
}

Int ramanujan_sum(Int m, Int l) {
  require_positive(m, "ramanujan_sum");
  const Int g = gcd(l, m);
  Int total = 0;
  for (Int d : divisors(g)) total += d * mobius(m / d);
  return total;
}

bool is_rth_power(Int k, Int r) {
  require_positive(k, "is_rth_power");
  require_positive(r, "is_rth_power");
  for (Int j = 1;; ++j) {
    Int power = 1;
    for (Int i = 0; i < r; ++i) {
      if (power > k / j) return false;
      power *= j;
    }
    if (power == k) return true;
    if (power > k) return false;
  }
}

Int ipow(Int base, unsigned exp) {
  Int result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

std::string to_string(const DivisorMap& map) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i != 0) out << ',';
    out << map.divisors()[i] << ':' << map.value_at_index(i).get_str();
  }
  out << '}';
  return out.str();
}

Rational ArithmeticFunction::operator()(Int k) const {
  require_positive(k, name.c_str());
  return evaluator(k);
}

const std::vector<std::string>& named_function_names() {
  static const std::vector<std::string> names = {
      "mobius", "euler_phi", "phi_inv", "liouville", "dedekind_psi", "klee",
      "rho",    "rho_prime", "beta",    "largest_odd", "sigma",      "abs_mobius"};
  return names;
}

ArithmeticFunction named_function(std::string_view name, const std::vector<Int>& params) {
  const bool needs_r = name == "klee" || name == "rho" || name == "rho_prime";
  if (needs_r) {
    if (params.size() != 1 || params[0] < 1) {
      throw std::invalid_argument(std::string(name) + " needs one parameter r >= 1");
    }
  } else if (!params.empty()) {
    throw std::invalid_argument(std::string(name) + " takes no parameters");
  }
  const Int r = needs_r ? params[0] : 0;
  ArithmeticFunction f{std::string(name), params, {}};

  if (name == "mobius") {
    f.evaluator = [](Int k) { return Rational(mobius(k)); };
  } else if (name == "abs_mobius") {
    f.evaluator = [](Int k) { return Rational(std::abs(mobius(k))); };
  } else if (name == "euler_phi") {
    f.evaluator = [](Int k) {
      Int count = 0;
      for (Int j = 1; j <= k; ++j) count += gcd(j, k) == 1 ? 1 : 0;
      return Rational(static_cast<long>(count));
    };
  } else if (name == "phi_inv") {
    f.evaluator = [](Int k) {
      Int total = 0;
      for (Int d : divisors(k)) total += d * mobius(d);
      return Rational(static_cast<long>(total));
    };
  } else if (name == "liouville") {
    f.evaluator = [](Int k) { return Rational(liouville_value(k)); };
  } else if (name == "dedekind_psi") {
    f.evaluator = [](Int k) {
      Int total = 0;
      for (Int d : divisors(k)) total += std::abs(mobius(d)) * (k / d);
      return Rational(static_cast<long>(total));
    };
  } else if (name == "klee") {
    // j counts when the largest r-th power dividing gcd(j, k) is 1.
    f.evaluator = [r](Int k) {
      Int count = 0;
      for (Int j = 1; j <= k; ++j) count += largest_rth_power_divisor(gcd(j, k), r) == 1 ? 1 : 0;
      return Rational(static_cast<long>(count));
    };
  } else if (name == "rho") {
    f.evaluator = [r](Int k) {
      Int total = 0;
      for (Int d : divisors(k)) total += is_rth_power(k / d, r) ? d : 0;
      return Rational(static_cast<long>(total));
    };
  } else if (name == "rho_prime") {
    f.evaluator = [r](Int k) {
      Int total = 0;
      for (Int d : divisors(k)) total += is_rth_power(d, r) ? d : 0;
      return Rational(static_cast<long>(total));
    };
  } else if (name == "beta") {
    f.evaluator = [](Int k) {
      Int count = 0;
      for (Int j = 1; j <= k; ++j) count += is_rth_power(gcd(j, k), 2) ? 1 : 0;
      return Rational(static_cast<long>(count));
    };
  } else if (name == "largest_odd") {
    f.evaluator = [](Int k) {
      while (k % 2 == 0) k /= 2;
      return Rational(static_cast<long>(k));
    };
  } else if (name == "sigma") {
    f.evaluator = [](Int k) {
      Int total = 0;
      for (Int d : divisors(k)) total += d;
      return Rational(static_cast<long>(total));
    };
  } else {
    throw std::invalid_argument("unknown arithmetic function '" + std::string(name) + "'");
  }
  return f;
}

}  // namespace cyclo
