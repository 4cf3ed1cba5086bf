#include "cyclo/catalog.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace cyclo;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Tally {
  int pass = 0, flagged = 0, fail = 0;
  std::vector<std::string> flags;
  std::vector<std::string> failures;

  void add(const SuiteItem& it) {
    switch (it.report.status()) {
      case Status::pass: ++pass; break;
      case Status::flagged: ++flagged; break;
      case Status::fail:
        ++fail;
        failures.push_back(it.suite + ":" + it.id);
        break;
    }
    for (auto& f : it.report.all_flags()) flags.push_back(it.suite + ":" + it.id + ": " + f);
  }

  std::string summary() const {
    std::ostringstream os;
    os << pass << " pass, " << flagged << " flagged, " << fail << " fail";
    if (!failures.empty()) {
      os << " [failing:";
      for (std::size_t i = 0; i < failures.size() && i < 4; ++i) os << " " << failures[i];
      if (failures.size() > 4) os << " ...";
      os << "]";
    }
    return os.str();
  }
};

Tally tally(const SuiteResult& r, const std::function<bool(const SuiteItem&)>& pick) {
  Tally t;
  for (const auto& it : r.items) {
    if (pick(it)) t.add(it);
  }
  return t;
}

Tally by_suite(const SuiteResult& r, std::initializer_list<const char*> suites) {
  return tally(r, [&](const SuiteItem& it) {
    for (const char* s : suites) {
      if (it.suite == s) return true;
    }
    return false;
  });
}

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << "criterion " << criterion << ": " << (ok ? "PASS" : "FAIL") << "  " << detail << std::endl;
}

std::vector<Int> coxeter_from_m(const CatalogEntry& e) {
  const EvenFunction m = multiplicities(e.zeta());
  std::vector<Int> out;
  for (Int k = 0; k < e.n; ++k) {
    for (Int c = 0; c < to_int(m(k)); ++c) out.push_back(k);
  }
  return out;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& cmd) {
  Run r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::string cli;
  app.add_option("--cli", cli, "path to the cyclo executable")->required();
  CLI11_PARSE(app, argc, argv);

  SuiteOptions opts;
  opts.seed = 42;

  {
    const auto t0 = Clock::now();
    int bad = 0;
    for (long n = 1; n <= 60; ++n) bad += verify_cyclotomic(n).status() == Status::fail;
    const double dt = seconds_since(t0);
    report(1, bad == 0 && dt < 10, std::to_string(60 - bad) + "/60 conductors, " + std::to_string(dt) + " s");
  }

  auto t0 = Clock::now();
  const SuiteResult prop = run_suite("prop", opts);
  const double prop_time = seconds_since(t0);

  const Tally coherence = by_suite(prop, {"coherence"});
  report(2, coherence.fail == 0 && coherence.pass == 60, coherence.summary() + " (100 products per n)");
  const Tally fourier = by_suite(prop, {"ramanujan"});
  report(3, fourier.fail == 0 && fourier.pass == 60, fourier.summary() + " (50 functions per n)");
  const Tally tensor = by_suite(prop, {"tensor"});
  report(4, tensor.fail == 0 && tensor.pass > 0, tensor.summary());
  const Tally sums = by_suite(prop, {"weighted-sums"});
  report(5, sums.fail == 0 && prop_time < 60,
         sums.summary() + ", alternating form with -E_r as displayed; " + std::to_string(prop_time) + " s");
  const Tally pairings = by_suite(prop, {"pairings"});
  report(6, pairings.fail == 0 && pairings.pass == 3, pairings.summary());

  const SuiteResult examples = run_suite("example", opts);
  Tally dirichlet = by_suite(prop, {"dirichlet"});
  for (const auto& it : examples.items) dirichlet.add(it);
  const bool hand_checked = std::any_of(examples.items.begin(), examples.items.end(), [](const SuiteItem& it) {
    return it.id == "example=01/A_2" && it.report.status() == Status::pass;
  });
  report(7, dirichlet.fail == 0 && hand_checked,
         dirichlet.summary() + (hand_checked ? ", A_2 instance ok" : ", A_2 instance failed"));

  const SuiteResult eta = run_suite("eta", opts);
  const Tally eta_t = by_suite(eta, {"eta"});
  report(8, eta_t.fail == 0 && eta_t.flags.size() == 1,
         eta_t.summary() + ", " + std::to_string(eta_t.flags.size()) + " flag(s)");

  const SuiteResult weights = run_suite("weights", opts);
  const Tally p8 = tally(weights, [](const SuiteItem& it) { return it.id == "P8"; });
  report(9, p8.fail == 0 && p8.pass == 1, p8.summary());
  const Tally seifert = tally(weights, [](const SuiteItem& it) { return it.id == "seifert/E8"; });
  report(10, seifert.fail == 0 && seifert.pass == 1, seifert.summary());

  {
    const auto t1 = Clock::now();
    const SuiteResult catalog = run_suite("catalog", opts);
    const Tally cat = by_suite(catalog, {"catalog"});
    bool coxeter = true;
    for (Int l = 1; l <= 12; ++l) {
      std::vector<Int> expected;
      for (Int j = 1; j <= l; ++j) expected.push_back(j);
      coxeter = coxeter && coxeter_from_m(family_A(l)) == expected;
    }
    coxeter = coxeter && coxeter_from_m(catalog_get("E8")) == std::vector<Int>{1, 7, 11, 13, 17, 19, 23, 29};
    const double dt = seconds_since(t1);
    report(11, cat.fail == 0 && cat.flags.size() == 2 && coxeter && dt < 10,
           cat.summary() + ", " + std::to_string(cat.flags.size()) + " flags, Coxeter exponents " +
               (coxeter ? "ok" : "wrong") + ", " + std::to_string(dt) + " s");
  }

  {
    const auto t1 = Clock::now();
    const Run a = run("'" + cli + "' --format json verify all --seed 42");
    const double dt = seconds_since(t1);
    const Run b = run("'" + cli + "' --format json verify all --seed 42");
    std::string status = "unparsed";
    std::size_t flags = 0;
    try {
      const nlohmann::json j = nlohmann::json::parse(a.out);
      status = j.at("status").get<std::string>();
      flags = j.at("payload").at("flags").size();
    } catch (const std::exception&) {
    }
    const bool deterministic = a.out == b.out && !a.out.empty();
    report(12, a.code == 0 && status != "fail" && status != "unparsed" && flags == 3 && deterministic && dt < 300,
           "status " + status + ", exit " + std::to_string(a.code) + ", " + std::to_string(flags) + " flags, " +
               (deterministic ? "deterministic" : "not deterministic") + ", " + std::to_string(dt) + " s");
  }

  std::cout << (12 - failures) << "/12 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
