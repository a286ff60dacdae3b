#include "fjt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "fjt/errors.hpp"
#include "fjt/report.hpp"

namespace fjt {
namespace {

using report::Json;

struct Options {
  std::string format = "json";
  std::string window;
  std::string profile = "padic:2";
  std::string method;
  int node = 0;  // 1-based; 0 picks the node of largest r
  bool quaternionic = false;
  std::vector<std::string> args;
};

struct Output {
  Json inputs;
  Json result;
  std::string md;
};

// Positional tokens and key=value tokens.
struct Tokens {
  std::vector<std::string> positional;
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) > 0; }

  int get_int(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw InvalidInput("missing " + key + "=<integer>");
    return parse_int(key, it->second);
  }
  int get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
  }
  std::string get(const std::string& key, const std::string& fallback) const {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  }

  static int parse_int(const std::string& key, const std::string& text) {
    int value = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw InvalidInput(key + " must be an integer, got '" + text + "'");
    return value;
  }
};

Tokens split_tokens(const std::vector<std::string>& args, const std::set<std::string>& keys) {
  Tokens t;
  for (const std::string& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos) {
      t.positional.push_back(a);
      continue;
    }
    const std::string key = a.substr(0, eq);
    if (!keys.count(key)) throw InvalidInput("unknown parameter '" + key + "'");
    t.kv[key] = a.substr(eq + 1);
  }
  return t;
}

double parse_double(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw InvalidInput(key + " must be a number, got '" + text + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw InvalidInput(key + " must be true or false");
}

std::vector<int> parse_int_list(const std::string& key, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Tokens::parse_int(key, item));
  return out;
}

// "E 7" or "E7"
CartanType cartan_from(const Tokens& t) {
  if (t.positional.size() == 2) return parse_cartan_type(t.positional[0], Tokens::parse_int("rank", t.positional[1]));
  if (t.positional.size() == 1 && t.positional[0].size() >= 2)
    return parse_cartan_type(t.positional[0].substr(0, 1),
                             Tokens::parse_int("rank", t.positional[0].substr(1)));
  throw InvalidInput("expected a Cartan type, e.g. 'E 7'");
}

Json type_inputs(const CartanType& ct) {
  return {{"family", std::string(1, family_letter(ct.family))}, {"rank", ct.rank}};
}

std::string md_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::string out = "|";
  for (const auto& h : head) out += " " + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < head.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& row : rows) {
    out += "|";
    for (const auto& cell : row) out += " " + cell + " |";
    out += "\n";
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> json_strings(const Json& arr) {
  std::vector<std::string> out;
  for (const auto& x : arr) out.push_back(x.get<std::string>());
  return out;
}

std::string md_ledger(const Json& ledger) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : ledger["entries"]) {
    const int order = e["order"].get<int>();
    rows.push_back({e["s"].get<std::string>(), order > 0 ? "pole" : "zero", std::to_string(std::abs(order))});
  }
  return md_table({"s", "kind", "order"}, rows);
}

// Abelian self-opposite node: the requested one, or the one of largest r.
ParabolicDatum select_node(const std::shared_ptr<const RootSystem>& rs, int requested) {
  auto nodes = classify_abelian_parabolics(rs);
  if (nodes.empty())
    throw OutOfScope(rs->type().name() + " has no maximal parabolic with abelian self-opposite radical");
  if (requested > 0) {
    for (auto& pd : nodes)
      if (pd.node == requested - 1) return pd;
    throw OutOfScope("node " + std::to_string(requested) + " of " + rs->type().name() +
                     " does not give an abelian self-opposite radical");
  }
  std::size_t best = 0;
  int best_r = -1;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const int r = static_cast<int>(strongly_orthogonal_set(nodes[k]).size());
    if (r > best_r) best_r = r, best = k;
  }
  return nodes[best];
}

Output cmd_classify(const Options& o) {
  const Tokens t = split_tokens(o.args, {});
  const CartanType ct = cartan_from(t);
  auto rs = std::make_shared<const RootSystem>(ct);
  Output out;
  out.inputs = type_inputs(ct);
  Json rows = Json::array();
  std::vector<std::vector<std::string>> md_rows;
  for (const ParabolicDatum& pd : classify_abelian_parabolics(rs)) {
    const JordanDatum jd = jordan_invariants(pd);
    rows.push_back(report::classify_row(pd, jd));
    const std::string m = pd.m_der();
    md_rows.push_back({std::to_string(pd.node + 1), m == "0" ? "-" : m, std::to_string(pd.dim_n()),
                       std::to_string(jd.r), jd.r >= 2 ? std::to_string(jd.d) : "-"});
  }
  out.result = {{"type", ct.name()}, {"rows", rows}};
  out.md = "## " + ct.name() + "\n\n" +
           (md_rows.empty() ? std::string("no abelian self-opposite maximal parabolic\n")
                            : md_table({"node", "m_der", "dim n", "r", "d"}, md_rows));
  return out;
}

Window default_window(int r, int d) {
  const int w = 2 + r * std::max(d, 2);
  return {Rational(-w), Rational(w)};
}

Output cmd_cfun_quaternionic(const Options& o, const Tokens& t) {
  const int r = t.get_int("r");
  const auto profile = ZetaProfile::parse(o.profile);
  const Window window = o.window.empty() ? Window{Rational(-(4 * r + 4)), Rational(4 * r + 4)}
                                         : parse_window(o.window);
  check_quaternionic(r);
  const ZetaProduct closed = quaternionic_closed_form(r);
  const auto chi = restricted_chi_s(r, 4);
  const ZetaProduct restricted = restricted_cfunction(restricted_datum(r, 4), chi);
  const Json ledger = report::ledger(full_ledger(closed, profile, window));

  Output out;
  out.inputs = {{"quaternionic", true}, {"r", r}, {"profile", profile.name()},
                {"window", {report::rational(window.lo), report::rational(window.hi)}}};
  out.result = {{"r", r},
                {"d", 4},
                {"products", {{"closed", report::zeta_product(closed)}, {"restricted", report::zeta_product(restricted)}}},
                {"equal", closed == restricted},
                {"verdict", std::string("restricted == closed: ") + (closed == restricted ? "true" : "false")},
                {"ledger", ledger},
                {"zero_pattern", report::rationals(quaternionic_zero_pattern(r))},
                {"notes", Json::array()}};
  out.md = "## quaternionic r=" + std::to_string(r) + "\n\n" + "closed: `" + closed.to_string() +
           "`\n\nrestricted: `" + restricted.to_string() + "`\n\n" + out.result["verdict"].get<std::string>() +
           "\n\n" + md_ledger(ledger);
  return out;
}

Output cmd_cfun(const Options& o) {
  const Tokens t = split_tokens(o.args, {"r"});
  if (o.quaternionic) return cmd_cfun_quaternionic(o, t);

  const CartanType ct = cartan_from(t);
  auto rs = std::make_shared<const RootSystem>(ct);
  const ParabolicDatum pd = select_node(rs, o.node);
  const JordanDatum jd = jordan_invariants(pd);
  const int d = jd.r >= 2 ? jd.d : 0;
  const auto profile = ZetaProfile::parse(o.profile);
  const Window window = o.window.empty() ? default_window(jd.r, d) : parse_window(o.window);

  std::vector<std::string> methods;
  if (o.method.empty()) methods = {"gk", "closed"};
  else methods = {o.method};

  Json products = Json::object();
  std::vector<ZetaProduct> values;
  Json notes = Json::array();
  for (const std::string& m : methods) {
    ZetaProduct zp;
    if (m == "gk") {
      zp = gk_cfunction(*rs, pd.node);
      if (!rs->simply_laced()) notes.push_back("outside split simply-laced closed-form scope");
    } else if (m == "closed") {
      zp = closed_form_c(jd.r, d);
    } else if (m == "restricted") {
      zp = restricted_cfunction(restricted_datum(jd.r, d), restricted_chi_s(jd.r, d));
    } else {
      throw InvalidInput("unknown method '" + m + "'");
    }
    products[m] = report::zeta_product(zp);
    values.push_back(zp);
  }
  const Json ledger = report::ledger(full_ledger(values.back(), profile, window));

  Output out;
  out.inputs = type_inputs(ct);
  out.inputs["node"] = pd.node + 1;
  out.inputs["method"] = o.method.empty() ? Json(nullptr) : Json(o.method);
  out.inputs["profile"] = profile.name();
  out.inputs["window"] = {report::rational(window.lo), report::rational(window.hi)};
  out.result = {{"type", ct.name()}, {"node", pd.node + 1}, {"r", jd.r}, {"d", d}, {"products", products}};
  if (values.size() == 2) {
    const bool eq = values[0] == values[1];
    out.result["equal"] = eq;
    out.result["verdict"] = std::string("gk == closed: ") + (eq ? "true" : "false");
  } else {
    out.result["equal"] = nullptr;
    out.result["verdict"] = nullptr;
  }
  out.result["ledger_of"] = methods.back();
  out.result["ledger"] = ledger;
  out.result["notes"] = notes;

  out.md = "## " + ct.name() + " node " + std::to_string(pd.node + 1) + "\n\n";
  for (const auto& m : methods) out.md += m + ": `" + products[m]["product"].get<std::string>() + "`\n\n";
  if (values.size() == 2) out.md += out.result["verdict"].get<std::string>() + "\n\n";
  for (const auto& n : notes) out.md += "note: " + n.get<std::string>() + "\n\n";
  out.md += "ledger (" + methods.back() + ", " + profile.name() + "):\n\n" + md_ledger(ledger);
  return out;
}

Output cmd_tower(const Options& o) {
  const Tokens t = split_tokens(o.args, {});
  const CartanType ct = cartan_from(t);
  auto rs = std::make_shared<const RootSystem>(ct);
  const ParabolicDatum pd = select_node(rs, o.node);
  const TowerReport tower = build_tower(pd);

  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rows;
  for (const TowerEntry& e : tower.chain) {
    names.push_back(e.type.name());
    rows.push_back({e.type.name(), std::to_string(e.node + 1), std::to_string(e.r), std::to_string(e.d),
                    e.m_der == "0" ? "-" : e.m_der, e.l_der.empty() ? "-" : e.l_der});
  }
  Output out;
  out.inputs = type_inputs(ct);
  out.inputs["node"] = pd.node + 1;
  out.result = report::tower(tower);
  out.result["summary"] = join(names, " -> ");
  out.md = "## tower of " + ct.name() + "\n\n" + join(names, " -> ") + "\n\n" +
           md_table({"type", "node", "r", "d", "m_der", "l_der"}, rows);
  return out;
}

Output cmd_reducibility(const Options& o) {
  const Tokens t = split_tokens(o.args, {"r", "d", "chi", "chi_D"});
  const int r = t.get_int("r");
  const int d = t.get_int("d", 0);
  const ChiDTag chi_d = parse_chi_d(t.get("chi_D", d % 2 == 0 ? "trivial" : "undefined"));
  const CharacterClass chi{parse_char(t.get("chi", "trivial")), chi_d};

  const ReducibilityReport rep = reducibility_points(r, d, chi_d, chi);
  const auto candidates = fj_candidates(r, d, chi_d, chi);
  const FjConsistency fj = verify_fj_consistency(r, d, chi_d);

  Output out;
  out.inputs = {{"r", r}, {"d", d}, {"chi", to_string(chi.tag)}, {"chi_D", to_string(chi_d)}};
  out.result = report::reducibility(rep);
  out.result["fj_candidates"] = report::rationals(candidates);
  out.result["fj_consistency"] = report::fj_consistency(fj);

  std::vector<std::vector<std::string>> rows;
  for (const auto& p : rep.points)
    rows.push_back({to_string(p.s), to_string(p.structure), p.trivial_subquotient ? "yes" : "no"});
  out.md = "## reducibility r=" + std::to_string(r) + " d=" + std::to_string(d) + " chi=" + to_string(chi.tag) +
           "\n\n" + md_table({"s", "structure", "trivial subquotient"}, rows) +
           "\nFourier-Jacobi consistency: " + (fj.ok ? "ok" : "FAILED") + "\n";
  if (rep.extrapolated) out.md += "\nnote: case formulas applied below dim D > 2\n";
  return out;
}

Output cmd_poles(const Options& o) {
  const Tokens t = split_tokens(o.args, {"r", "d", "chi_D", "local", "s0"});
  const int r = t.get_int("r");
  const int d = t.get_int("d", 0);
  const ChiDTag chi_d = parse_chi_d(t.get("chi_D", d % 2 == 0 ? "trivial" : "undefined"));
  Output out;
  out.inputs = {{"r", r}, {"d", d}, {"chi_D", to_string(chi_d)}};

  if (t.has("s0")) {
    const Rational s0 = parse_rational(t.get("s0", ""));
    const auto c = chi_s_coords(r, d, s0);
    const WallReport w = wall_check(c);
    out.inputs["s0"] = report::rational(s0);
    out.result = {{"chi_s", report::rationals(c.coords)},
                  {"rho", report::rationals(rho_coords(r, d))},
                  {"walls", report::walls(w)},
                  {"regular", w.regular()}};
    std::vector<std::string> hits = json_strings(out.result["walls"]);
    out.md = "## chi_s at s0=" + to_string(s0) + "\n\ncoordinates: (" +
             join(json_strings(out.result["chi_s"]), ", ") + ")\n\nwalls: " +
             (hits.empty() ? std::string("none") : join(hits, "; ")) + "\n";
    return out;
  }

  const bool local = parse_bool("local", t.get("local", "true"));
  out.inputs["local"] = local;
  const GlobalPoleReport rep = global_pole_ledger(r, d, chi_d, local);
  const auto upper = possible_pole_candidates(r, d, chi_d, CharacterClass{CharTag::trivial, chi_d});
  out.result = report::global_poles(rep);
  out.result["candidates"] = report::rationals(upper);
  out.result["bounds_meet"] = upper == rep.locations();

  std::vector<std::vector<std::string>> rows;
  for (const auto& p : rep.points) rows.push_back({to_string(p.s0), std::to_string(p.order), to_string(p.residue)});
  out.md = "## poles r=" + std::to_string(r) + " d=" + std::to_string(d) + "\n\n" +
           md_table({"s0", "order", "residue"}, rows);
  for (const auto& c : rep.rejected)
    out.md += "\nrejected s0=" + to_string(c.s0) + ": " + join(json_strings(report::walls(c.walls)), "; ");
  if (!rep.rejected.empty()) out.md += "\n";
  if (rep.outside_main_theorem) out.md += "\nnote: SL2 base, outside the main theorem\n";
  return out;
}

Output cmd_pyramid(const Options& o) {
  const Tokens t = split_tokens(o.args, {"r", "i", "d", "p", "q", "a"});
  const int r = t.get_int("r");
  const int i = t.get_int("i");
  const PyramidReport rep = jantzen_pyramid(r, i);
  Output out;
  out.inputs = {{"r", r}, {"i", i}};
  out.result = report::pyramid(rep);
  out.md = "## pyramid r=" + std::to_string(r) + " i=" + std::to_string(i) + "\n\n";
  for (auto it = rep.floors.rbegin(); it != rep.floors.rend(); ++it) {
    const int tt = it->front().p + it->front().q;
    std::vector<std::string> cells;
    for (const auto& c : *it) cells.push_back("V(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")");
    std::string tag = tt == rep.socle_floor ? " (socle)" : tt == rep.cosocle_floor ? " (co-socle)" : "";
    out.md += "t=" + std::to_string(tt) + tag + ": " + join(cells, " ") + "\n";
  }
  out.md += "\ncells: " + std::to_string(rep.cells.size()) + "\n";

  if (t.has("a")) {
    const int d = t.get_int("d");
    const int p = t.get_int("p");
    const int q = t.get_int("q");
    const auto a = parse_int_list("a", t.get("a", ""));
    const KTypeCheck k = cosocle_ktype_check(r, d, p, q, a);
    out.inputs["d"] = d;
    out.inputs["p"] = p;
    out.inputs["q"] = q;
    out.inputs["a"] = a;
    out.result["ktype"] = report::ktype(k);
    std::vector<std::string> hw;
    for (int x : k.highest_weight) hw.push_back(std::to_string(x));
    out.md += "\nK-type (" + join(hw, ", ") + "): " + (k.in_cone ? "in" : "not in") + " the co-socle cone\n";
  }
  return out;
}

Output cmd_series(const Options& o) {
  const Tokens t = split_tokens(o.args, {"q", "s", "terms"});
  const double q = parse_double("q", t.get("q", "2"));
  const double s = parse_double("s", t.get("s", "1"));
  const int terms = t.get_int("terms", 200);
  const double partial = sl2_quaternion_series(q, s, terms);
  const double closed = (1.0 - std::pow(q, -(s + 2))) / (1.0 - std::pow(q, -s));
  Output out;
  out.inputs = {{"q", report::real(q)}, {"s", report::real(s)}, {"terms", terms}};
  out.result = {{"partial_sum", report::real(partial)},
                {"closed_form", report::real(closed)},
                {"abs_error", report::real(std::abs(partial - closed))}};
  std::ostringstream md;
  md.precision(12);
  md << "## series q=" << q << " s=" << s << " terms=" << terms << "\n\n"
     << md_table({"partial sum", "closed form", "abs error"},
                 {{out.result["partial_sum"].dump(), out.result["closed_form"].dump(),
                   out.result["abs_error"].dump()}});
  out.md = md.str();
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fjt: abelian-radical parabolics, c-functions, reducibility and Eisenstein poles"};
  app.require_subcommand(1, 1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    Output (*fn)(const Options&);
  };
  const Entry entries[] = {
      {"classify", "abelian self-opposite nodes with (m_der, dim n, r, d): classify E 7", cmd_classify},
      {"cfun", "c-function as a zeta product with its ledger: cfun E 7 [--method closed] | cfun --quaternionic r=2", cmd_cfun},
      {"tower", "Fourier-Jacobi tower: tower E 7", cmd_tower},
      {"reducibility", "local reducibility points: reducibility r=3 d=8 [chi=trivial] [chi_D=trivial]", cmd_reducibility},
      {"poles", "global Eisenstein poles: poles r=3 d=8 | poles r=2 d=2 s0=1", cmd_poles},
      {"pyramid", "real Jantzen pyramid: pyramid r=3 i=1 [d=8 p=1 q=0 a=5,0,0]", cmd_pyramid},
      {"series", "SL2 over a quaternion algebra spherical series: series q=2 s=1 [terms=200]", cmd_series},
  };

  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("args", o.args, "positional type/rank or key=value parameters");
    sub->add_option("--format", o.format, "json or md")->check(CLI::IsMember({"json", "md"}));
    sub->add_option("--window", o.window, "ledger window a,b");
    sub->add_option("--profile", o.profile, "padic:q, real or global");
    if (std::string(e.name) == "cfun") {
      sub->add_option("--method", o.method, "gk, closed or restricted")
          ->check(CLI::IsMember({"gk", "closed", "restricted"}));
      sub->add_flag("--quaternionic", o.quaternionic, "quaternionic closed form, needs r=<rank>");
    }
    if (std::string(e.name) == "cfun" || std::string(e.name) == "tower")
      sub->add_option("--node", o.node, "1-based marked node");
    subs.emplace_back(sub, &e);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, entry] : subs) {
    if (!sub->parsed()) continue;
    try {
      const Output result = entry->fn(o);
      if (o.format == "md") out << result.md;
      else out << report::envelope(entry->name, result.inputs, result.result).dump(2) << "\n";
      return kExitOk;
    } catch (const InvalidInput& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const OutOfScope& e) {
      err << "refused: " << e.what() << "\n";
      return kExitRefusal;
    } catch (const InconsistentData& e) {
      err << "inconsistent: " << e.what() << "\n";
      return kExitInconsistent;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInconsistent;
    }
  }
  return kExitUsage;
}

}  // namespace fjt
