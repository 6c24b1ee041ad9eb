#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "klein/bkp_tau.hpp"
#include "klein/characters.hpp"
#include "klein/contentprod.hpp"
#include "klein/hurwitz.hpp"
#include "klein/symfun.hpp"
#include "klein/verify.hpp"

using json = nlohmann::json;
using namespace klein;

namespace {

constexpr int kSchemaVersion = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Defaults, overridden by the config file and then by flags.
struct Config {
  int order = 4;               // truncation of formal parameters
  int max_degree = 0;          // verify default (0 keeps suite ranges)
  int degree_limit = 10;       // largest degree accepted anywhere
  double oracle_max_iterations = 1e9;
  unsigned seed = 2024;
  std::string format = "json";
};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n"), e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  try {
    size_t pos;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' expects an integer, got '" + v + "'");
  }
}

void load_config(Config& c, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k == "order") c.order = to_int(k, v);
    else if (k == "max_degree") c.max_degree = to_int(k, v);
    else if (k == "degree_limit") c.degree_limit = to_int(k, v);
    else if (k == "oracle_max_iterations") c.oracle_max_iterations = to_int(k, v);
    else if (k == "seed") c.seed = static_cast<unsigned>(to_int(k, v));
    else if (k == "format") c.format = v;
    else throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + k + "'");
  }
}

Rational rat(const std::string& what, const std::string& s) {
  try {
    return parse_rational(trim(s));
  } catch (const std::exception&) {
    throw UsageError(what + ": cannot parse '" + s + "' as a rational");
  }
}

Partition part(const std::string& what, const std::string& s) {
  try {
    return Partition::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(what + ": cannot parse '" + s + "' as a partition (" + e.what() + ")");
  }
}

std::vector<Rational> rat_list(const std::string& what, std::string s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw UsageError(what + ": expected a list [a,b,...], got '" + s + "'");
  std::vector<Rational> out;
  s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) return out;
  for (const auto& x : split(s, ',')) out.push_back(rat(what, x));
  return out;
}

// "k1=v1;k2=v2" with list values in brackets.
std::map<std::string, std::string> key_values(const std::string& what, const std::string& s, const std::vector<std::string>& allowed) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(s, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError(what + ": expected key=value, got '" + item + "'");
    std::string k = trim(item.substr(0, eq));
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) throw UsageError(what + ": unknown key '" + k + "'");
    out[k] = trim(item.substr(eq + 1));
  }
  return out;
}

Profiles profiles(const std::string& s) {
  Profiles out;
  if (trim(s).empty()) return out;
  for (const auto& p : split(s, ';')) out.push_back(part("--profiles", p));
  return out;
}

json jpart(const Partition& p) { return json(p.parts()); }
std::string q(const Rational& r) { return to_string(r); }

void check_degree(int d, const Config& c) {
  if (d < 0) throw UsageError("degree must be nonnegative");
  if (d > c.degree_limit) throw UsageError("degree " + std::to_string(d) + " exceeds degree_limit " + std::to_string(c.degree_limit));
}

// Parameter ring with the formal generator h bounded by `order`.
RingPtr h_ring(int order) { return RingBuilder().group("h", order).gen("h", "h").build(); }

// zeta=[ζ1,...];h=c, the formal h scaled by c.
WeightSpecI weight_i(const std::string& s, const RingPtr& ring) {
  auto kv = key_values("--weight-i", s, {"zeta", "h"});
  if (!kv.count("zeta")) throw UsageError("--weight-i needs zeta=[...]");
  WeightSpecI spec;
  for (const auto& z : rat_list("zeta", kv["zeta"])) spec.zeta.push_back(GradedPoly(ring, z));
  spec.h = GradedPoly::generator(ring, "h") * (kv.count("h") ? rat("h", kv["h"]) : Rational(1));
  return spec;
}

// t=..;xi=[ξ1,ξ2,...];xineg=[ξ−1,ξ−2,...];L=c, with ξ_m scaled by h^{|m|} and L by h.
WeightSpecII weight_ii(const std::string& s, const RingPtr& ring) {
  auto kv = key_values("--weight-ii", s, {"t", "xi", "xineg", "L"});
  if (!kv.count("t")) throw UsageError("--weight-ii needs t=...");
  WeightSpecII spec{rat("t", kv["t"]), GradedPoly(ring), {}};
  if (spec.t == 0) throw UsageError("--weight-ii needs t != 0");
  GradedPoly h = GradedPoly::generator(ring, "h");
  if (kv.count("L")) spec.L = h * rat("L", kv["L"]);
  if (kv.count("xi")) {
    auto v = rat_list("xi", kv["xi"]);
    for (size_t m = 0; m < v.size(); ++m) spec.xi.emplace(static_cast<int>(m + 1), h.pow(m + 1) * v[m]);
  }
  if (kv.count("xineg")) {
    auto v = rat_list("xineg", kv["xineg"]);
    for (size_t m = 0; m < v.size(); ++m) spec.xi.emplace(-static_cast<int>(m + 1), h.pow(m + 1) * v[m]);
  }
  return spec;
}

// "x:v,x:v".
std::map<long, Rational> r_table_spec(const std::string& s) {
  std::map<long, Rational> t;
  for (const auto& item : split(s, ',')) {
    auto c = item.find(':');
    if (c == std::string::npos) throw UsageError("--r-table: expected x:value, got '" + item + "'");
    t[to_int("--r-table", trim(item.substr(0, c)))] = rat("--r-table", item.substr(c + 1));
  }
  return t;
}

QTPairs qt_pairs(const std::string& s) {
  QTPairs out;
  for (const auto& item : split(s, ',')) {
    auto c = item.find(':');
    if (c == std::string::npos) throw UsageError("--pairs: expected q:t, got '" + item + "'");
    out.push_back({rat("--pairs", item.substr(0, c)), rat("--pairs", item.substr(c + 1))});
  }
  return out;
}

json sym_terms(const SymFunc& f) {
  json a = json::array();
  for (const auto& [p, c] : f)
    if (c != 0) a.push_back({{"p", jpart(p)}, {"coeff", q(c)}});
  return a;
}

// Coefficients of h^k as "num/den" strings.
json h_series(const GradedPoly& f) {
  json a = json::array();
  const int ih = f.ring()->gen("h");
  for (int k = 0; k <= f.ring()->bound("h"); ++k) a.push_back(q(f.coefficient_of(ih, k).constant_term()));
  return a;
}

struct Report {
  json inputs = json::object();
  json results = json::object();
  json method = json::object();
  int status = 0;
};

void emit_csv_value(std::ostream& os, const std::string& key, const json& v) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) emit_csv_value(os, key.empty() ? it.key() : key + "." + it.key(), it.value());
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    for (size_t i = 0; i < v.size(); ++i) emit_csv_value(os, key + "." + std::to_string(i), v[i]);
  } else {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    bool quote = s.find_first_of(",\"\n") != std::string::npos;
    if (quote) {
      std::string e;
      for (char c : s) e += c == '"' ? std::string("\"\"") : std::string(1, c);
      s = "\"" + e + "\"";
    }
    os << key << "," << s << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz numbers of the projective plane, characters, symmetric functions and BKP tau functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::string config_path, format;
  bool no_timing = false;
  app.add_option("--config", config_path, "key = value config file (default: $KLEIN_CONFIG)");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--no-timing", no_timing, "omit the elapsed time field");

  int euler = 1, hdeg = -1;
  std::string prof_s;
  bool use_oracle = false, transitive = false, nonorientable = false;
  auto* hur = app.add_subcommand("hurwitz", "Hurwitz number H^{E,F}(d; profiles)");
  hur->add_option("--euler", euler, "Euler characteristic E of the base (E <= 2)")->required();
  hur->add_option("--degree", hdeg, "degree d")->required();
  hur->add_option("--profiles", prof_s, "profiles separated by ';', e.g. \"[2,1];[3]\"")->required();
  hur->add_flag("--oracle", use_oracle, "also count by monodromy enumeration");
  hur->add_flag("--transitive", transitive, "oracle counts connected covers only");
  hur->add_flag("--nonorientable", nonorientable, "for even E <= 0, use the nonorientable base");

  int cdeg = -1;
  auto* ct = app.add_subcommand("chartable", "character table of S_d");
  ct->add_option("--degree", cdeg, "degree d")->required();

  std::string family = "schur", mu_s, q_s = "0", t_s = "0", alpha_s = "1";
  bool dual = false;
  auto* sf = app.add_subcommand("symfun", "power-sum expansion of a symmetric function");
  sf->add_option("--family", family, "schur, monomial, macdonald, jack, hall-littlewood")
      ->check(CLI::IsMember({"schur", "monomial", "macdonald", "jack", "hall-littlewood"}));
  sf->add_option("--mu", mu_s, "partition")->required();
  sf->add_option("--q", q_s, "Macdonald q");
  sf->add_option("--t", t_s, "Macdonald or Hall-Littlewood t");
  sf->add_option("--alpha", alpha_s, "Jack alpha");
  sf->add_flag("--dual", dual, "Q instead of P");

  std::string lambda_s, param_i, param_ii, ct_t;
  int cn = 0, max_m = 4, corder = -1;
  auto* co = app.add_subcommand("content", "content sums and content products of a diagram");
  co->add_option("--lambda", lambda_s, "partition")->required();
  co->add_option("--param-i", param_i, "zeta=[...];h=c");
  co->add_option("--param-ii", param_ii, "t=..;xi=[...];xineg=[...];L=c");
  co->add_option("--n", cn, "shift n (parametrization I) or x (parametrization II)");
  co->add_option("--max-m", max_m, "largest m for the content power sums")->check(CLI::Range(0, 12));
  co->add_option("--t", ct_t, "evaluate T_lambda(t)");
  co->add_option("--order", corder, "truncation order in h");

  std::string wi, wii, rtab, extract_s;
  int tN = -1, tn = 0, trunc = -1, torder = -1;
  auto* ta = app.add_subcommand("tau", "hypergeometric BKP tau function");
  ta->add_option("--weight-i", wi, "zeta=[...];h=c");
  ta->add_option("--weight-ii", wii, "t=..;xi=[...];xineg=[...];L=c");
  ta->add_option("--r-table", rtab, "x:value,x:value,...");
  ta->add_option("--N", tN, "N (N >= truncation means N = infinity)")->required();
  ta->add_option("--n", tn, "n");
  ta->add_option("--truncate", trunc, "degree bound D in p")->required();
  ta->add_option("--extract-profile", extract_s, "report the coefficient of p_Delta");
  ta->add_option("--order", torder, "truncation order in h");

  std::string kind, wmu, wdelta, wq = "0", wt = "0", walpha = "1", pairs_s;
  auto* we = app.add_subcommand("weighted", "weighted Hurwitz sums");
  we->add_option("--kind", kind, "C, J, S, K, Jt, M or F")->required()->check(CLI::IsMember({"C", "J", "S", "K", "Jt", "M", "F"}));
  we->add_option("--mu", wmu, "weight partition mu (not used by F)");
  we->add_option("--delta", wdelta, "profile Delta")->required();
  we->add_option("--q", wq, "q");
  we->add_option("--t", wt, "t");
  we->add_option("--alpha", walpha, "alpha");
  we->add_option("--pairs", pairs_s, "q:t,q:t,... for F");

  std::string suite = "all";
  int vmax = -1;
  long vseed = -1;
  auto* ve = app.add_subcommand("verify", "run verification suites");
  ve->add_option("--suite", suite, "suite name, number, 'content' or 'all'");
  ve->add_option("--max-degree", vmax, "degree range for the suites")->check(CLI::Range(1, 10));
  ve->add_option("--seed", vseed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report rep;
  std::function<void()> run;
  try {
    if (config_path.empty())
      if (const char* env = std::getenv("KLEIN_CONFIG")) config_path = env;
    if (!config_path.empty()) load_config(cfg, config_path);
    if (!format.empty()) cfg.format = format;
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("format must be json or csv");

    if (hur->parsed()) {
      check_degree(hdeg, cfg);
      if (euler > 2) throw UsageError("--euler must be at most 2");
      Profiles p = profiles(prof_s);
      try {
        check_profiles(hdeg, p);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Surface s = Surface::from_euler(euler, !nonorientable);
      if (transitive && !use_oracle) throw UsageError("--transitive requires --oracle");
      json jp = json::array();
      for (const auto& x : p) jp.push_back(jpart(x));
      rep.inputs = {{"euler", euler}, {"degree", hdeg}, {"profiles", jp}, {"orientable", s.orientable}};
      run = [&, p, s] {
        rep.results["euler_cover"] = euler_cover(euler, hdeg, p);
        if (!transitive) rep.results["value"] = q(hurwitz_character(euler, hdeg, p));
        rep.method["character"] = "sum over irreducible characters";
        if (use_oracle) {
          OracleOptions o;
          o.transitive = transitive;
          o.max_iterations = cfg.oracle_max_iterations;
          auto r = monodromy_oracle(s, hdeg, p, o);
          rep.results["oracle_value"] = q(r.value);
          rep.results["oracle_solutions"] = to_string(r.solutions);
          rep.method["oracle"] = transitive ? "transitive monodromy enumeration" : "monodromy enumeration";
          if (!transitive && r.value != hurwitz_character(euler, hdeg, p)) rep.status = 1;
          if (transitive) rep.results["value"] = q(r.value);
        }
      };
    } else if (ct->parsed()) {
      check_degree(cdeg, cfg);
      if (cdeg < 1) throw UsageError("--degree must be at least 1");
      rep.inputs = {{"degree", cdeg}};
      run = [&] {
        const auto& tab = char_table(cdeg);
        json classes = json::array(), rows = json::array();
        for (const auto& p : tab.partitions()) classes.push_back(jpart(p));
        for (size_t i = 0; i < tab.partitions().size(); ++i) {
          json row = json::array();
          for (size_t j = 0; j < tab.partitions().size(); ++j) row.push_back(tab(i, j));
          rows.push_back({{"lambda", jpart(tab.partitions()[i])}, {"chi", row}});
        }
        rep.results = {{"classes", classes}, {"rows", rows}};
        rep.method["characters"] = "Murnaghan-Nakayama";
      };
    } else if (sf->parsed()) {
      Partition mu = part("--mu", mu_s);
      check_degree(mu.weight(), cfg);
      Rational qq = rat("--q", q_s), tt = rat("--t", t_s), al = rat("--alpha", alpha_s);
      if (family == "jack" && al <= 0) throw UsageError("--alpha must be positive");
      rep.inputs = {{"family", family}, {"mu", jpart(mu)}, {"dual", dual}};
      if (family == "macdonald") rep.inputs["q"] = q(qq);
      if (family == "macdonald" || family == "hall-littlewood") rep.inputs["t"] = q(tt);
      if (family == "jack") rep.inputs["alpha"] = q(al);
      run = [&, mu, qq, tt, al] {
        SymFunc f;
        if (family == "schur") f = schur(mu);
        else if (family == "monomial") f = monomial(mu);
        else if (family == "macdonald") f = dual ? macdonald_Q(mu, qq, tt) : macdonald_P(mu, qq, tt);
        else if (family == "jack") f = dual ? jack_Q(mu, al) : jack_P(mu, al);
        else f = dual ? hall_littlewood_Q(mu, tt) : hall_littlewood_P(mu, tt);
        rep.results = {{"terms", sym_terms(f)}, {"text", klein::to_string(f)}};
        rep.method["construction"] = family == "schur" || family == "monomial" ? "characteristic map" : "Gram-Schmidt from monomials";
      };
    } else if (co->parsed()) {
      Partition l = part("--lambda", lambda_s);
      check_degree(l.weight(), cfg);
      if (!param_i.empty() && !param_ii.empty()) throw UsageError("--param-i and --param-ii are exclusive");
      const int order = corder >= 0 ? corder : cfg.order;
      auto ring = h_ring(order);
      std::optional<WeightSpecI> s1;
      std::optional<WeightSpecII> s2;
      if (!param_i.empty()) s1 = weight_i(param_i, ring);
      if (!param_ii.empty()) s2 = weight_ii(param_ii, ring);
      std::optional<Rational> tv;
      if (!ct_t.empty()) tv = rat("--t", ct_t);
      rep.inputs = {{"lambda", jpart(l)}, {"n", cn}, {"max_m", max_m}, {"order", order}};
      if (s1) rep.inputs["param_i"] = param_i;
      if (s2) rep.inputs["param_ii"] = param_ii;
      if (tv) rep.inputs["t"] = q(*tv);
      run = [&, l, ring, s1, s2, tv] {
        rep.results["contents"] = l.contents();
        json Ph = json::array(), ph = json::array();
        for (int m = 0; m <= max_m; ++m) Ph.push_back(q(Phi(l, m)));
        for (int k = 0; k < std::max(1, l.weight()); ++k) ph.push_back(q(phi_k(l, k)));
        rep.results["Phi"] = Ph;
        rep.results["phi_k"] = ph;
        auto cp = content_poly_identity(l);
        json prod = json::array();
        for (const auto& c : cp.product) prod.push_back(q(c));
        rep.results["content_polynomial"] = prod;
        if (!cp.agree()) rep.status = 1;
        if (tv) rep.results["T"] = q(T_lambda(l, *tv));
        if (s1) {
          GradedPoly a = content_product_I_nodes(l, *s1, cn), b = content_product_I_exp(l, *s1, cn);
          rep.results["product"] = h_series(a);
          rep.results["exponential_form"] = h_series(b);
          rep.results["text"] = a.to_string();
          if (a != b || a != content_product_I_rows(l, *s1, cn)) rep.status = 1;
        }
        if (s2) {
          GradedPoly a = content_product_II_nodes(l, *s2, cn), b = content_product_II_exp(l, *s2, cn);
          rep.results["product"] = h_series(a);
          rep.results["exponential_form"] = h_series(b);
          rep.results["text"] = a.to_string();
          if (a != b || a != content_product_II_rows(l, *s2, cn)) rep.status = 1;
        }
        rep.method["series"] = "formal in h, truncated at the given order";
      };
    } else if (ta->parsed()) {
      check_degree(trunc, cfg);
      if ((!wi.empty()) + (!wii.empty()) + (!rtab.empty()) > 1) throw UsageError("give at most one of --weight-i, --weight-ii, --r-table");
      const int order = torder >= 0 ? torder : cfg.order;
      auto params = h_ring(order);
      auto ring = tau_ring(trunc, {"p"}, params);
      RFunction r = r_constant(ring);
      std::string wdesc = "r = 1";
      if (!wi.empty()) r = r_weight_I(ring, weight_i(wi, params)), wdesc = "I";
      if (!wii.empty()) r = r_weight_II(ring, weight_ii(wii, params)), wdesc = "II";
      if (!rtab.empty()) r = r_table(ring, r_table_spec(rtab)), wdesc = "table";
      std::optional<Partition> ex;
      if (!extract_s.empty()) {
        ex = part("--extract-profile", extract_s);
        if (ex->weight() > trunc) throw UsageError("--extract-profile has weight above --truncate");
      }
      rep.inputs = {{"N", tN}, {"n", tn}, {"truncate", trunc}, {"order", order}, {"weight", wdesc}};
      if (!wi.empty()) rep.inputs["weight_i"] = wi;
      if (!wii.empty()) rep.inputs["weight_ii"] = wii;
      if (!rtab.empty()) rep.inputs["r_table"] = rtab;
      if (ex) rep.inputs["extract_profile"] = jpart(*ex);
      run = [&, ring, r, ex] {
        GradedPoly tau = build_tau(ring, tN, tn, r);
        rep.results["series"] = tau.to_string();
        if (ex) {
          GradedPoly c = coefficient_of_pdelta(tau, *ex);
          rep.results["coefficient"] = {{"profile", jpart(*ex)},
                                        {"h_series", h_series(c)},
                                        {"text", c.to_string()},
                                        {"hurwitz", ex->weight() <= tN}};
        }
        rep.method["series"] = "sum over diagrams with l(lambda) <= N";
      };
    } else if (we->parsed()) {
      Partition delta = part("--delta", wdelta), mu = wmu.empty() ? Partition() : part("--mu", wmu);
      check_degree(delta.weight(), cfg);
      if (kind != "F" && wmu.empty()) throw UsageError("--kind " + kind + " needs --mu");
      Rational qq = rat("--q", wq), tt = rat("--t", wt), al = rat("--alpha", walpha);
      QTPairs pairs;
      if (kind == "F") {
        if (pairs_s.empty()) throw UsageError("--kind F needs --pairs");
        pairs = qt_pairs(pairs_s);
      }
      rep.inputs = {{"kind", kind}, {"delta", jpart(delta)}};
      if (kind != "F") rep.inputs["mu"] = jpart(mu);
      if (kind == "K" || kind == "Jt" || kind == "M") rep.inputs["t"] = q(tt);
      if (kind == "M") rep.inputs["q"] = q(qq);
      if (kind == "J" || kind == "Jt") rep.inputs["alpha"] = q(al);
      if (kind == "F") rep.inputs["pairs"] = pairs_s;
      run = [&, delta, mu, qq, tt, al, pairs] {
        Rational v;
        if (kind == "C") v = weighted_C(mu, delta);
        else if (kind == "J") v = weighted_J(mu, delta, al);
        else if (kind == "S") v = weighted_S(mu, delta);
        else if (kind == "K") v = weighted_K(mu, delta, tt);
        else if (kind == "Jt") v = weighted_J_t(mu, delta, al, tt);
        else if (kind == "M") v = weighted_M(mu, delta, qq, tt);
        else v = F_sum(delta, pairs);
        rep.results["value"] = q(v);
      };
    } else if (ve->parsed()) {
      SuiteOptions opt;
      opt.max_degree = vmax > 0 ? vmax : cfg.max_degree;
      opt.seed = vseed >= 0 ? static_cast<unsigned>(vseed) : cfg.seed;
      std::vector<int> ids;
      try {
        ids = select_suites(suite);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      rep.inputs = {{"suite", suite}, {"max_degree", opt.max_degree}, {"seed", opt.seed}};
      run = [&, opt, ids] {
        json checks = json::array();
        for (int id : ids) {
          CheckResult r = run_suite(id, opt);
          json j = {{"id", r.id},
                    {"name", r.name},
                    {"title", r.title},
                    {"passed", r.failures == 0 && r.checks > 0},
                    {"checks", r.checks},
                    {"failures", r.failures},
                    {"notes", r.notes}};
          if (r.failures) j["first_failure"] = r.first_failure;
          if (!no_timing) j["elapsed_us"] = static_cast<long>(r.seconds * 1e6);
          if (r.failures || r.checks == 0) rep.status = 1;
          checks.push_back(j);
        }
        rep.results["checks"] = checks;
        rep.results["all_passed"] = rep.status == 0;
      };
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    run();
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();

  json out = {{"schema_version", kSchemaVersion},
              {"command", app.get_subcommands().front()->get_name()},
              {"inputs", rep.inputs},
              {"results", rep.results},
              {"method", rep.method},
              {"status", rep.status == 0 ? "ok" : "failed"}};
  if (!no_timing) out["elapsed_us"] = us;
  if (cfg.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "key,value\n";
    emit_csv_value(std::cout, "", out);
  }
  return rep.status;
}
