#include "cyclo/verify.hpp"

#include "cyclo/apostol.hpp"
#include "cyclo/catalog.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/dirichlet.hpp"
#include "cyclo/eta.hpp"
#include "cyclo/weights.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>
#include <tuple>

namespace cyclo {

namespace {

struct Job {
  std::string suite;
  std::string id;
  std::function<SuiteItem()> run;
};

std::string pad2(long v) {
  std::ostringstream out;
  out << std::setw(2) << std::setfill('0') << v;
  return out.str();
}

/// Runs `count` instances and keeps only the ones that do not pass (at most 3 in full).
class Aggregate {
 public:
  explicit Aggregate(std::string name) : report_(std::move(name)) {}

  void add(IdentityReport r) {
    ++total_;
    const Status s = r.status();
    if (s == Status::pass) return;
    if (s == Status::fail) ++failed_;
    if (kept_ < 3 || s == Status::flagged) {
      report_.add_child(std::move(r));
      ++kept_;
    }
  }

  IdentityReport finish() {
    report_.set_detail("instances", total_);
    if (failed_ != 0) report_.set_detail("failing_instances", failed_);
    return std::move(report_);
  }

 private:
  IdentityReport report_;
  long total_ = 0;
  long failed_ = 0;
  int kept_ = 0;
};

SuiteItem item(const std::string& suite, const std::string& id, IdentityReport report) {
  return {suite, id, std::move(report), nullptr};
}

DirichletSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> dist(-3, 3);
  DirichletSeries out = DirichletSeries::generate(order, [&](Int) { return Rational(dist(rng)); });
  out[1] = 1;
  return out;
}

void add_cyclotomic(std::vector<Job>& jobs, const SuiteOptions& o) {
  jobs.push_back({"cyclotomic", "n<=" + std::to_string(o.nmax), [o] {
                    Aggregate agg("prod Phi_d = q^n - 1 and the Moebius product, n <= " + std::to_string(o.nmax));
                    for (long n = 1; n <= o.nmax; ++n) agg.add(verify_cyclotomic(n));
                    return item("cyclotomic", "n<=" + std::to_string(o.nmax), agg.finish());
                  }});
}

void add_coherence(std::vector<Job>& jobs, const SuiteOptions& o) {
  for (long n = 1; n <= o.nmax; ++n) {
    const std::string id = "n=" + pad2(n);
    jobs.push_back({"coherence", id, [o, n, id] {
                      auto rng = item_rng(o.seed, "coherence/" + id);
                      Aggregate agg("cyclotomic exponents and DFT, n=" + std::to_string(n));
                      for (int t = 0; t < 5 * o.trials; ++t) agg.add(verify_coherence(random_zeta(n, rng)));
                      return item("coherence", id, agg.finish());
                    }});
  }
}

void add_fourier(std::vector<Job>& jobs, const SuiteOptions& o) {
  for (long n = 1; n <= o.nmax; ++n) {
    const std::string id = "n=" + pad2(n);
    jobs.push_back({"ramanujan", id, [o, n, id] {
                      auto rng = item_rng(o.seed, "ramanujan/" + id);
                      Aggregate agg("Ramanujan round trip, n=" + std::to_string(n));
                      for (int t = 0; t < 5 * o.trials / 2; ++t) {
                        agg.add(verify_ramanujan_round_trip(random_even_function(n, rng)));
                      }
                      return item("ramanujan", id, agg.finish());
                    }});
  }
}

void add_tensor(std::vector<Job>& jobs) {
  jobs.push_back({"tensor", "d<=4,k<=3", [] {
                    IdentityReport r("tensor powers of q^d - 1");
                    for (long d = 1; d <= 4; ++d) {
                      for (long k = 1; k <= 3; ++k) r.add_child(verify_tensor_power(d, k));
                    }
                    return item("tensor", "d<=4,k<=3", std::move(r));
                  }});
}

void add_prop2(std::vector<Job>& jobs, const SuiteOptions& o) {
  jobs.push_back({"weighted-sums", "geometric", [] {
                    IdentityReport r("weighted geometric sums n<=6, r<=4");
                    for (auto [b, c] : {std::pair<Int, Int>{1, 0}, {2, 3}}) {
                      for (Int n = 0; n <= 6; ++n) {
                        for (Int rr = 0; rr <= 4; ++rr) {
                          for (bool alt : {false, true}) {
                            IdentityReport w = weighted_geometric_sum(n, b, c, rr, alt);
                            if (w.status() != Status::pass) r.add_child(std::move(w));
                          }
                        }
                      }
                    }
                    return item("weighted-sums", "geometric", std::move(r));
                  }});
  for (Int n : {6, 12}) {
    for (auto [b, c] : {std::pair<Int, Int>{1, 0}, {2, 3}}) {
      for (Int r = 0; r <= 4; ++r) {
        std::ostringstream id;
        id << "n=" << pad2(n) << "/b=" << b << ",c=" << c << "/r=" << r;
        jobs.push_back({"weighted-sums", id.str(), [o, n, b = b, c = c, r, id = id.str()] {
                          auto rng = item_rng(o.seed, "weighted-sums/" + id);
                          Aggregate agg("weighted sums of a(k), " + id);
                          for (int t = 0; t < std::max(1, o.trials / 2); ++t) {
                            agg.add(verify_prop2(random_zeta(n, rng), b, c, r));
                          }
                          return item("weighted-sums", id, agg.finish());
                        }});
      }
    }
  }
}

void add_pairings(std::vector<Job>& jobs, const SuiteOptions& o) {
  for (Int n : {6, 12, 30}) {
    const std::string id = "n=" + pad2(n);
    jobs.push_back({"pairings", id, [o, n, id] {
                      auto rng = item_rng(o.seed, "pairings/" + id);
                      Aggregate agg("phi_s and Moebius pairings, n=" + std::to_string(n));
                      std::uniform_int_distribution<long> dist(-4, 4);
                      for (int t = 0; t < o.trials; ++t) {
                        const ZetaProduct z = random_zeta(n, rng);
                        agg.add(verify_prop3(z, {-2, -1, 0, 1, 2, 3}));
                        for (PairingPreset p :
                             {PairingPreset::necklace, PairingPreset::log_derivative, PairingPreset::ramanujan_form}) {
                          agg.add(verify_mobius_pairing(z, p));
                        }
                        const DivisorMap F = DivisorMap::generate(n, [&](Int) { return Rational(dist(rng)); });
                        for (Int s = -1; s <= 2; ++s) agg.add(generalized_pair_check(F, s));
                        const DivisorMap e = z.rational_exponents();
                        agg.add(gf_power_series(even_extension(e), e));
                      }
                      return item("pairings", id, agg.finish());
                    }});
  }
}

void add_dirichlet(std::vector<Job>& jobs, const SuiteOptions& o) {
  for (Int n : {6, 12, 30}) {
    const std::string id = "n=" + pad2(n);
    jobs.push_back({"dirichlet", id, [o, n, id] {
                      auto rng = item_rng(o.seed, "dirichlet/" + id);
                      const std::size_t N = o.order;
                      Aggregate agg("generalized transforms, n=" + std::to_string(n));
                      const DirichletSeries zeta = DirichletSeries::zeta(N);
                      const DirichletSeries mu = DirichletSeries::mobius(N);
                      const DirichletSeries unit = DirichletSeries::unit(N);
                      for (int t = 0; t < o.trials; ++t) {
                        const ZetaProduct z = random_zeta(n, rng);
                        const DirichletSeries G = random_series(rng, N);
                        const DirichletSeries H = random_series(rng, N);
                        for (const DirichletSeries* g : {&zeta, &mu, &unit, &G}) agg.add(verify_prop8(z, *g));
                        agg.add(verify_prop9(z, zeta, zeta));
                        agg.add(verify_prop9(z, zeta, mu));
                        agg.add(verify_prop9(z, G, H));
                        agg.add(verify_zeta_multiplication(z.rational_exponents(), N));
                        agg.add(verify_fourier_dirichlet(random_even_function(n, rng), N));
                        agg.add(verify_ps_g_geometric(z, 3 * static_cast<std::size_t>(n)));
                      }
                      return item("dirichlet", id, agg.finish());
                    }});
  }
  jobs.push_back({"dirichlet", "holder", [o] {
                    return item("dirichlet", "holder", verify_holder(12, o.order));
                  }});
}

void add_examples(std::vector<Job>& jobs, const SuiteOptions& o) {
  const std::vector<Int> ns = o.n ? std::vector<Int>{*o.n} : std::vector<Int>{6, 12, 30};
  for (int index = 1; index <= 12; ++index) {
    if (o.index && *o.index != index) continue;
    const bool uses_r = example_setup(index, 1, 1, 1).uses_r;
    std::vector<Int> rs{1};
    if (uses_r) rs = o.r ? std::vector<Int>{*o.r} : std::vector<Int>{1, 2, 3};
    for (Int n : ns) {
      for (Int r : rs) {
        std::string id = "example=" + pad2(index) + "/n=" + pad2(n);
        if (uses_r) id += "/r=" + std::to_string(r);
        jobs.push_back({"example", id, [o, index, n, r, id] {
                          auto rng = item_rng(o.seed, "example/" + id);
                          Aggregate agg("example " + std::to_string(index) + ", " + id);
                          nlohmann::json payload;
                          for (int t = 0; t < o.trials; ++t) {
                            ExampleResult res = example_identity(index, random_zeta(n, rng), r, o.order);
                            if (payload.is_null() || (res.status() == Status::fail &&
                                                      payload.value("status", "") != "fail")) {
                              payload = res.to_json();
                            }
                            agg.add(std::move(res.report));
                          }
                          SuiteItem it = item("example", id, agg.finish());
                          it.payload = std::move(payload);
                          return it;
                        }});
      }
    }
  }
  if (o.index && *o.index != 1) return;
  jobs.push_back({"example", "example=01/A_2", [] {
                    const ZetaProduct z = ZetaProduct::parse("n=3; e={1:-1,3:1}");
                    IdentityReport r("example 1 on A_2 at k = 3");
                    const EvenFunction m = multiplicities(z);
                    const EvenFunction ps = star_functions(z).p_star;
                    const Rational lhs = m(3) * 3;
                    Rational rhs;
                    for (Int d : divisors(3)) rhs += Rational(static_cast<long>(euler_phi(3 / d))) * ps(d);
                    r.expect_equal("3 m(3) vs sum phi(3/d) p*(d)", lhs, rhs, [](const Rational& x) { return x.get_str(); });
                    r.expect_equal("3 m(3)", lhs, Rational(0), [](const Rational& x) { return x.get_str(); });
                    r.expect_equal("p*(3)", ps(3), Rational(-2), [](const Rational& x) { return x.get_str(); });
                    ExampleResult full = example_identity(1, z, 1, 200);
                    r.add_child(std::move(full.report));
                    return item("example", "example=01/A_2", std::move(r));
                  }});
}

std::vector<std::pair<std::string, ZetaProduct>> catalog_products() {
  std::vector<std::pair<std::string, ZetaProduct>> out;
  for (const auto& e : catalog_entries(12)) out.emplace_back(e.name, e.zeta());
  return out;
}

void add_eta(std::vector<Job>& jobs, const SuiteOptions& o) {
  jobs.push_back({"eta", "catalog", [o] {
                    return item("eta", "catalog", verify_eta_all(catalog_products(), o.eta_order));
                  }});
  jobs.push_back({"eta", "lambert", [o] {
                    IdentityReport r("L(q) as a divisor sum and as a Lambert series");
                    r.expect_equal("coefficients", lambert_L(o.eta_order), lambert_L_from_quotients(o.eta_order),
                                   [](const PowerSeries& s) { return s.to_string(8); });
                    return item("eta", "lambert", std::move(r));
                  }});
}

void add_weights(std::vector<Job>& jobs) {
  jobs.push_back({"weights", "P8", [] {
                    const WeightSystem w = WeightSystem::parse("1,1,1;3");
                    IdentityReport r("weights (1,1,1;3) against the P8 lines");
                    r.add_child(verify_weights(w));
                    const CatalogEntry p8 = catalog_get("P8");
                    const auto rq = [](const Rational& x) { return x.get_str(); };
                    const PartialFractions mf = m_gf_from_weights(w);
                    const PartialFractions pf = p_gf_from_weights(w);
                    for (Int d : divisors(3)) {
                      r.expect_equal("m-line at d=" + std::to_string(d), mf.line.at(d), p8.m_line().at(d), rq);
                      r.expect_equal("p-line at d=" + std::to_string(d), pf.line.at(d), p8.p_line().at(d), rq);
                    }
                    const auto rp = [](const Polynomial& p) { return p.to_string(); };
                    r.expect_equal("spectral", spectral_gf(w), Polynomial::from_ints({1, 3, 3, 1}), rp);
                    std::vector<Rational> folded(3);
                    const Polynomial sp = spectral_gf(w);
                    for (std::size_t i = 0; i < sp.coefficients().size(); ++i) folded[i % 3] += sp.coefficients()[i];
                    r.expect_equal("spectral mod q^3-1", Polynomial(folded), Polynomial::from_ints({2, 3, 3}), rp);
                    return item("weights", "P8", std::move(r));
                  }});
  for (const char* text : {"15,10,6;30", "6,4,3;12", "9,6,4;18", "2,2,1;4", "3,2,2;6"}) {
    const std::string id = std::string("weights=") + text;
    jobs.push_back({"weights", id, [text, id] {
                      return item("weights", id, verify_weights(WeightSystem::parse(text)));
                    }});
  }
  jobs.push_back({"weights", "seifert/E8", [] {
                    const WeightSystem w = WeightSystem::parse("15,10,6;30");
                    const SeifertData s = SeifertData::parse("0; 2/1,3/1,5/1");
                    IdentityReport r("Seifert data of E8 against the catalog");
                    r.add_child(verify_seifert(w, s));
                    const ZetaProduct z = zeta_from_seifert(w, s);
                    const ZetaProduct e8 = catalog_get("E8").zeta();
                    r.expect_equal("e-vector", z, e8, [](const ZetaProduct& x) { return x.to_string(); });
                    return item("weights", "seifert/E8", std::move(r));
                  }});
}

void add_catalog(std::vector<Job>& jobs) {
  for (const auto& entry : catalog_entries(12)) {
    jobs.push_back({"catalog", entry.name, [entry] { return item("catalog", entry.name, verify_entry(entry)); }});
  }
  jobs.push_back({"catalog", "saito-pairs", [] { return item("catalog", "saito-pairs", saito_dual_report(12)); }});
}

std::vector<SuiteItem> run_jobs(std::vector<Job>& jobs, unsigned threads) {
  std::vector<SuiteItem> out(jobs.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, jobs.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i].run();
      } catch (const std::exception& e) {
        IdentityReport r(jobs[i].suite + "/" + jobs[i].id);
        r.record_mismatch("exception", e.what(), "");
        out[i] = item(jobs[i].suite, jobs[i].id, std::move(r));
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

std::mt19937_64 item_rng(std::uint64_t seed, const std::string& tag) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : tag) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

ZetaProduct random_zeta(long n, std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  ExponentMap e(n, 0);
  for (Int d : e.divisors()) e.at(d) = dist(rng);
  return ZetaProduct(std::move(e));
}

EvenFunction random_even_function(long n, std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return EvenFunction::from_gcd_values(DivisorMap::generate(n, [&](Int) { return Rational(dist(rng)); }));
}

IdentityReport verify_cyclotomic(long n) {
  IdentityReport r("cyclotomic identities n=" + std::to_string(n));
  const auto render = [](const Polynomial& p) { return p.to_string(); };
  Polynomial product = Polynomial::constant(1);
  RationalFunction mobius_product = RationalFunction::constant(1);
  for (Int d : divisors(n)) {
    product *= cyclotomic(d);
    const int mu = mobius(n / d);
    if (mu != 0) mobius_product *= pow(RationalFunction(Polynomial::binomial(static_cast<std::size_t>(d))), mu);
  }
  r.expect_equal("prod_{d|n} Phi_d", product, Polynomial::binomial(static_cast<std::size_t>(n)), render);
  r.expect_equal("prod (q^d-1)^{mu(n/d)}", mobius_product, RationalFunction(cyclotomic(n)),
                 [](const RationalFunction& f) { return f.to_string(); });
  if (cyclotomic(n).degree() != euler_phi(n)) {
    r.record_mismatch("degree", std::to_string(cyclotomic(n).degree()), std::to_string(euler_phi(n)));
  }
  return r;
}

IdentityReport verify_coherence(const ZetaProduct& z) {
  const Int n = z.conductor();
  IdentityReport r("exponents and power sums " + z.to_string());
  const EvenFunction m = multiplicities(z);
  const ExponentMap factored = factor_cyclotomic(to_rational_function(z), n);
  for (Int d : factored.divisors()) {
    const Rational got(static_cast<long>(factored.at(d)));
    if (got != m(n / d)) r.record_mismatch("exponent of Phi_" + std::to_string(d), got.get_str(), m(n / d).get_str());
  }
  r.expect_equal("p vs DFT of m", power_sums(z), dft_power_sums(m),
                 [](const EvenFunction& f) { return f.to_string(); });
  return r;
}

IdentityReport verify_ramanujan_round_trip(const EvenFunction& a) {
  IdentityReport r("Ramanujan expansion round trip n=" + std::to_string(a.conductor()));
  r.expect_equal("a -> r -> a", ramanujan_reconstruct(ramanujan_coefficients(a)), a,
                 [](const EvenFunction& f) { return f.to_string(); });
  r.expect_equal("r -> a -> r", ramanujan_coefficients(ramanujan_reconstruct(a)), a,
                 [](const EvenFunction& f) { return f.to_string(); });
  return r;
}

IdentityReport verify_tensor_power(long d, long k) {
  IdentityReport r("(q^" + std::to_string(d) + "-1) tensor power " + std::to_string(k));
  const Polynomial f = Polynomial::binomial(static_cast<std::size_t>(d));
  Polynomial t = f;
  for (long i = 1; i < k; ++i) t = tensor_product(t, f);
  long e = 1;
  for (long i = 1; i < k; ++i) e *= d;
  r.expect_equal("roots", t, pow(f, static_cast<unsigned>(e)), [](const Polynomial& p) { return p.to_string(); });
  return r;
}

Status SuiteResult::status() const {
  Status s = Status::pass;
  for (const auto& it : items) {
    const Status c = it.report.status();
    if (static_cast<int>(c) > static_cast<int>(s)) s = c;
  }
  return s;
}

std::vector<std::string> SuiteResult::flags() const {
  std::vector<std::string> out;
  for (const auto& it : items) {
    for (auto& f : it.report.all_flags()) out.push_back(it.suite + "/" + it.id + ": " + f);
  }
  return out;
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  long counts[3] = {0, 0, 0};
  for (const auto& it : items) {
    const Status s = it.report.status();
    ++counts[static_cast<int>(s)];
    nlohmann::json entry = {{"suite", it.suite}, {"id", it.id}, {"status", to_string(s)}};
    if (s != Status::pass) entry["report"] = it.report.to_json();
    if (!it.payload.is_null()) entry["example"] = it.payload;
    list.push_back(std::move(entry));
  }
  return {{"scope", scope},
          {"status", to_string(status())},
          {"counts", {{"pass", counts[0]}, {"flagged", counts[1]}, {"fail", counts[2]}}},
          {"flags", flags()},
          {"items", list}};
}

std::string SuiteResult::describe() const {
  std::ostringstream out;
  for (const auto& it : items) {
    const Status s = it.report.status();
    out << '[' << to_string(s) << "] " << it.suite << '/' << it.id << '\n';
    if (s != Status::pass) out << it.report.describe(2);
  }
  const auto f = flags();
  out << "flags: " << f.size() << '\n';
  for (const auto& x : f) out << "  " << x << '\n';
  out << "status: " << to_string(status()) << " (" << items.size() << " items)\n";
  return out.str();
}

const std::vector<std::string>& suite_scopes() {
  static const std::vector<std::string> scopes{"all", "prop", "example", "catalog", "eta", "weights"};
  return scopes;
}

SuiteResult run_suite(const std::string& scope, const SuiteOptions& options) {
  if (std::find(suite_scopes().begin(), suite_scopes().end(), scope) == suite_scopes().end()) {
    throw std::invalid_argument("unknown scope '" + scope + "'");
  }
  if (options.nmax < 1 || options.trials < 1 || options.order < 1) {
    throw std::invalid_argument("nmax, trials and order must be positive");
  }
  std::vector<Job> jobs;
  const bool all = scope == "all";
  if (all || scope == "prop") {
    add_cyclotomic(jobs, options);
    add_coherence(jobs, options);
    add_fourier(jobs, options);
    add_tensor(jobs);
    add_prop2(jobs, options);
    add_pairings(jobs, options);
    add_dirichlet(jobs, options);
  }
  if (all || scope == "example") add_examples(jobs, options);
  if (all || scope == "eta") add_eta(jobs, options);
  if (all || scope == "weights") add_weights(jobs);
  if (all || scope == "catalog") add_catalog(jobs);
  SuiteResult result;
  result.scope = scope;
  result.items = run_jobs(jobs, options.threads);
  std::stable_sort(result.items.begin(), result.items.end(), [](const SuiteItem& a, const SuiteItem& b) {
    return std::tie(a.suite, a.id) < std::tie(b.suite, b.id);
  });
  return result;
}

}  // namespace cyclo
