#include "cyclo/catalog.hpp"
#include "cyclo/dirichlet.hpp"
#include "cyclo/eta.hpp"
#include "cyclo/verify.hpp"
#include "cyclo/weights.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace cyclo;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

struct Output {
  std::string format = "text";
  json command;

  bool is_json() const { return format == "json"; }

  int emit(Status status, json payload, const std::string& text) const {
    if (is_json()) {
      json report = {{"command", command}, {"status", to_string(status)}, {"payload", std::move(payload)}};
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
    }
    return status == Status::fail ? kFail : kOk;
  }

  int error(const std::string& message, std::optional<std::size_t> position = std::nullopt) const {
    if (is_json()) {
      json err = {{"message", message}};
      if (position) err["position"] = *position;
      std::cout << json{{"command", command}, {"status", "error"}, {"error", err}}.dump(2) << '\n';
    }
    std::cerr << "error: " << message << '\n';
    return kUsage;
  }
};

json rational_json(const Rational& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

json divisor_json(const DivisorMap& m) {
  json out = json::object();
  for (std::size_t i = 0; i < m.size(); ++i) out[std::to_string(m.divisors()[i])] = rational_json(m.value_at_index(i));
  return out;
}

json series_json(const PowerSeries& s) {
  json out = json::array();
  for (const auto& c : s.coefficients()) out.push_back(rational_json(c));
  return out;
}

DirichletSeries choose_G(const std::string& name, const std::vector<Int>& params, std::size_t order) {
  if (name == "zeta") return DirichletSeries::zeta(order);
  if (name == "mobius" && params.empty()) return DirichletSeries::mobius(order);
  if (name == "unit") return DirichletSeries::unit(order);
  if (name == "zeta_rs") {
    if (params.size() != 1) throw std::invalid_argument("zeta_rs needs one --param");
    return DirichletSeries::zeta_rs(params[0], order);
  }
  return series_of(named_function(name, params), order);
}

int analyze(const Output& out, const std::string& input) {
  const ZetaProduct z = ZetaProduct::parse(input);
  const EvenFunction m = multiplicities(z);
  const EvenFunction p = power_sums(z);
  const StarFunctions star = star_functions(z);
  const ZetaProduct t = saito_transform(z);
  const GeneratingFunctions gf = generating_functions(m, t.rational_exponents());
  const RationalFunction f = to_rational_function(z);
  ExponentMap phi = cyclotomic_exponents(z);
  json phi_json = json::object();
  for (std::size_t i = 0; i < phi.size(); ++i) phi_json[std::to_string(phi.divisors()[i])] = phi.value_at_index(i);

  json payload = {{"input", z.to_json()},
                  {"milnor_number", z.milnor_number()},
                  {"m", m.to_json()},
                  {"p", p.to_json()},
                  {"m_star", star.m_star.to_json()},
                  {"p_star", star.p_star.to_json()},
                  {"ramanujan", {{"m", ramanujan_coefficients(m).to_json()}, {"p", ramanujan_coefficients(p).to_json()}}},
                  {"generating_function", {{"from_values", gf.from_values.to_string()}, {"from_e", gf.from_e.to_string()}}},
                  {"cyclotomic_exponents", phi_json},
                  {"rational_function", f.to_string()}};

  std::ostringstream text;
  text << z.to_string() << '\n'
       << "milnor number  " << z.milnor_number() << '\n'
       << "m              " << m.to_string() << '\n'
       << "p              " << p.to_string() << '\n'
       << "m*             " << star.m_star.to_string() << '\n'
       << "p*             " << star.p_star.to_string() << '\n'
       << "r(m)           " << ramanujan_coefficients(m).to_string() << '\n'
       << "r(p)           " << ramanujan_coefficients(p).to_string() << '\n'
       << "sum m(k)q^k/(1-q^n)    " << gf.from_values.to_string() << '\n'
       << "sum e(n/d)/(1-q^d)     " << gf.from_e.to_string() << '\n'
       << "zeta_e         " << f.to_string() << '\n';
  return out.emit(Status::pass, payload, text.str());
}

int dual(const Output& out, const std::string& input) {
  const ZetaProduct z = ZetaProduct::parse(input);
  const ZetaProduct t = saito_transform(z);
  const ZetaProduct d = saito_dual(z);
  json payload = {{"input", z.to_json()}, {"transform", t.to_json()}, {"dual", d.to_json()}};
  return out.emit(Status::pass, payload, "transform  " + t.to_string() + "\ndual       " + d.to_string() + "\n");
}

int series(const Output& out, const std::string& input, const std::string& g_name, const std::vector<Int>& params,
           const std::string& transform, const std::string& kind, std::size_t order) {
  const ZetaProduct z = ZetaProduct::parse(input);
  const DirichletSeries G = choose_G(g_name, params, order);
  json payload = {{"input", z.to_json()}, {"G", g_name}, {"transform", transform}, {"kind", kind}, {"order", order}};
  std::string text;
  if (kind == "dirichlet") {
    const GTransforms g = g_transforms(z, G);
    const DirichletSeries& s = transform == "m" ? g.m : transform == "p" ? g.p : transform == "m_star" ? g.m_star : g.p_star;
    payload["coefficients"] = s.to_json();
    text = transform + "_G  " + s.to_string(order);
  } else {
    if (transform != "m" && transform != "p") throw std::invalid_argument("power series transforms are m and p");
    PowerSeries g(order);
    for (std::size_t k = 1; k < order; ++k) g[k] = G[static_cast<Int>(k)];
    const PsGTransforms ps = ps_g_transforms(z, g);
    const PowerSeries& s = transform == "m" ? ps.m : ps.p;
    payload["coefficients"] = series_json(s);
    text = transform + "_g(q)  " + s.to_string(order);
  }
  return out.emit(Status::pass, payload, text);
}

int eta(const Output& out, const std::string& input, std::size_t order) {
  const ZetaProduct z = ZetaProduct::parse(input);
  const EtaExpansion x = eta_log_derivative(z, order);
  const IdentityReport r = verify_eta(z, order);
  json payload = {{"input", z.to_json()},    {"order", order},         {"mu_e", x.mu_e},
                  {"direct", series_json(x.direct)}, {"sign", eta_sign(x)}, {"report", r.to_json()}};
  std::ostringstream text;
  text << "q d/dq log eta  " << x.direct.to_string(16) << '\n'
       << "sign vs sum d e(d) L(q^d)  " << eta_sign(x) << '\n'
       << r.describe();
  return out.emit(r.status(), payload, text.str());
}

int weights(const Output& out, const std::string& input, const std::string& seifert) {
  const WeightSystem w = WeightSystem::parse(input);
  IdentityReport r = verify_weights(w);
  const PartialFractions m = m_gf_from_weights(w);
  const PartialFractions p = p_gf_from_weights(w);
  json payload = {{"weights", w.to_string()},
                  {"milnor_number", rational_json(w.milnor_number())},
                  {"spectral", spectral_gf(w).to_string()},
                  {"m_line", divisor_json(m.line)},
                  {"p_line", divisor_json(p.line)}};
  std::ostringstream text;
  text << w.to_string() << '\n'
       << "milnor number  " << w.milnor_number().get_str() << '\n'
       << "spectrum       " << spectral_gf(w).to_string() << '\n'
       << "m line         " << to_string(m.line) << '\n'
       << "p line         " << to_string(p.line) << '\n';
  if (!seifert.empty()) {
    const SeifertData s = SeifertData::parse(seifert);
    const ZetaProduct z = zeta_from_seifert(w, s);
    payload["seifert"] = s.to_string();
    payload["zeta"] = z.to_json();
    text << "seifert        " << s.to_string() << '\n' << "zeta           " << z.to_string() << '\n';
    r.add_child(verify_seifert(w, s));
  }
  payload["report"] = r.to_json();
  text << r.describe();
  return out.emit(r.status(), payload, text.str());
}

std::string entry_text(const CatalogEntry& e) {
  std::ostringstream text;
  text << e.display << "  (n=" << e.n << ", " << e.source << ")\n"
       << "  m: " << e.m_text() << '\n'
       << "  p: " << e.p_text() << '\n';
  if (!e.note.empty()) text << "  note: " << e.note << '\n';
  return text.str();
}

int catalog_list(const Output& out, Int family_max) {
  json names = json::array();
  std::string text;
  for (const auto& e : catalog_entries(family_max)) {
    names.push_back(e.name);
    text += e.name + "  " + e.display + "\n";
  }
  return out.emit(Status::pass, {{"entries", names}}, text);
}

int catalog_get_cmd(const Output& out, const std::string& name, const std::vector<Int>& params) {
  const CatalogEntry e = catalog_get(name, params);
  json payload = e.to_json();
  payload["zeta"] = e.zeta().to_json();
  return out.emit(Status::pass, payload, entry_text(e) + "  zeta: " + e.zeta().to_string() + "\n");
}

int catalog_verify(const Output& out, Int family_max) {
  const IdentityReport r = verify_catalog(family_max);
  return out.emit(r.status(), {{"report", r.to_json()}, {"flags", r.all_flags()}}, r.describe());
}

int catalog_pairs(const Output& out, Int family_max) {
  json rows = json::array();
  std::ostringstream text;
  for (const auto& p : saito_dual_pairs(family_max)) {
    rows.push_back({{"name", p.name}, {"transform_matches", p.transform_matches}, {"dual_matches", p.dual_matches}});
    text << p.name << "  transform:";
    for (const auto& x : p.transform_matches) text << ' ' << x;
    text << "  dual:";
    for (const auto& x : p.dual_matches) text << ' ' << x;
    text << '\n';
  }
  const IdentityReport r = saito_dual_report(family_max);
  return out.emit(r.status(), {{"pairs", rows}, {"report", r.to_json()}}, text.str() + r.describe());
}

int verify(const Output& out, const std::string& scope, const SuiteOptions& options) {
  const SuiteResult result = run_suite(scope, options);
  return out.emit(result.status(), result.to_json(), result.describe());
}

}  // namespace

int main(int argc, char** argv) {
  Output out;
  out.command = json::array();
  for (int i = 1; i < argc; ++i) out.command.push_back(argv[i]);

  CLI::App app{"Cyclotomic products, Saito duality and Ramanujan sums"};
  app.require_subcommand(1);
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string input;
  std::size_t order = 200;

  auto* analyze_cmd = app.add_subcommand("analyze", "m, p, m*, p*, Ramanujan coefficients and generating functions");
  analyze_cmd->add_option("input", input, "n=<int>; e={d:v,...}")->required();

  auto* dual_cmd = app.add_subcommand("dual", "Saito transform and dual");
  dual_cmd->add_option("input", input)->required();

  std::string g_name = "zeta", transform = "m", kind = "dirichlet";
  std::vector<Int> g_params;
  auto* series_cmd = app.add_subcommand("series", "Truncated series of the G-transforms");
  series_cmd->add_option("input", input)->required();
  series_cmd->add_option("--G", g_name, "zeta, mobius, unit, zeta_rs or a named arithmetic function");
  series_cmd->add_option("--param", g_params, "Parameters of G");
  series_cmd->add_option("--transform", transform)->check(CLI::IsMember({"m", "p", "m_star", "p_star"}));
  series_cmd->add_option("--kind", kind)->check(CLI::IsMember({"dirichlet", "power"}));
  series_cmd->add_option("--order", order)->check(CLI::PositiveNumber);

  std::size_t eta_order = 100;
  auto* eta_cmd = app.add_subcommand("eta", "q-expansion of the logarithmic derivative of the eta product");
  eta_cmd->add_option("input", input)->required();
  eta_cmd->add_option("--order", eta_order)->check(CLI::PositiveNumber);

  std::string seifert;
  auto* weights_cmd = app.add_subcommand("weights", "Weight system a,b,c;n and optional Seifert data");
  weights_cmd->add_option("input", input, "a,b,c;n")->required();
  weights_cmd->add_option("--seifert", seifert, "g; a1/b1,a2/b2,...");

  Int family_max = 12;
  auto* catalog_cmd = app.add_subcommand("catalog", "Singularity catalog");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_option("--family-max", family_max)->check(CLI::Range(3, 60));
  auto* list_cmd = catalog_cmd->add_subcommand("list");
  std::string entry_name;
  std::vector<Int> entry_params;
  auto* get_cmd = catalog_cmd->add_subcommand("get");
  get_cmd->add_option("name", entry_name)->required();
  get_cmd->add_option("params", entry_params);
  auto* cverify_cmd = catalog_cmd->add_subcommand("verify");
  auto* pairs_cmd = catalog_cmd->add_subcommand("pairs");
  auto* export_cmd = catalog_cmd->add_subcommand("export");

  SuiteOptions options;
  std::string scope = "all";
  long n_filter = 0, r_filter = 0;
  int index_filter = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("scope", scope)->check(CLI::IsMember(suite_scopes()));
  verify_cmd->add_option("--seed", options.seed);
  verify_cmd->add_option("--nmax", options.nmax)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--trials", options.trials)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--order", options.order)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--eta-order", options.eta_order)->check(CLI::PositiveNumber);
  auto* index_opt = verify_cmd->add_option("--index", index_filter)->check(CLI::Range(1, 12));
  auto* n_opt = verify_cmd->add_option("--n", n_filter)->check(CLI::PositiveNumber);
  auto* r_opt = verify_cmd->add_option("--r", r_filter)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", options.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze_cmd) return analyze(out, input);
    if (*dual_cmd) return dual(out, input);
    if (*series_cmd) return series(out, input, g_name, g_params, transform, kind, order);
    if (*eta_cmd) return eta(out, input, eta_order);
    if (*weights_cmd) return weights(out, input, seifert);
    if (*list_cmd) return catalog_list(out, family_max);
    if (*get_cmd) return catalog_get_cmd(out, entry_name, entry_params);
    if (*cverify_cmd) return catalog_verify(out, family_max);
    if (*pairs_cmd) return catalog_pairs(out, family_max);
    if (*export_cmd) {
      std::cout << export_catalog(family_max).dump(2) << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      if (*index_opt) options.index = index_filter;
      if (*n_opt) options.n = n_filter;
      if (*r_opt) options.r = r_filter;
      return verify(out, scope, options);
    }
  } catch (const ParseError& e) {
    return out.error(e.what(), e.position());
  } catch (const std::invalid_argument& e) {
    return out.error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
