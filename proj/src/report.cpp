#include "fjt/report.hpp"

#include <cstdio>
#include <string>

#ifndef FJT_VERSION
#define FJT_VERSION "0.0.0"
#endif

namespace fjt::report {

Json rational(const Rational& x) { return to_string(x); }

Json rationals(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(to_string(x));
  return out;
}

Json real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

Json zeta_product(const ZetaProduct& zp) {
  Json num = Json::array(), den = Json::array();
  for (const AffineArg& a : zp.numerator()) num.push_back(a.to_string());
  for (const AffineArg& a : zp.denominator()) den.push_back(a.to_string());
  return {{"product", zp.to_string()}, {"numerator", num}, {"denominator", den}};
}

Json ledger(const PoleLedger& l) {
  Json entries = Json::array();
  for (const LedgerEntry& e : l.entries) entries.push_back({{"s", rational(e.location)}, {"order", e.order}});
  return {{"poles", rationals(l.poles())}, {"zeros", rationals(l.zeros())}, {"entries", entries}};
}

Json classify_row(const ParabolicDatum& pd, const JordanDatum& jd) {
  Json row;
  row["node"] = pd.node + 1;
  row["m_der"] = pd.m_der();
  row["dim_n"] = pd.dim_n();
  row["r"] = jd.r;
  row["d"] = jd.r >= 2 ? Json(jd.d) : Json(nullptr);
  row["coordinate_kind"] = to_string(jd.kind);
  Json so = Json::array();
  for (const Root& b : jd.strongly_orthogonal) so.push_back(b.to_string());
  row["strongly_orthogonal"] = so;
  return row;
}

Json tower(const TowerReport& t) {
  Json chain = Json::array();
  for (const TowerEntry& e : t.chain) {
    Json entry;
    entry["type"] = e.type.name();
    entry["node"] = e.node + 1;
    entry["r"] = e.r;
    entry["d"] = e.d;
    entry["m_der"] = e.m_der;
    entry["l_der"] = e.l_der.empty() ? Json(nullptr) : Json(e.l_der);
    chain.push_back(entry);
  }
  return {{"chain", chain}};
}

Json reducibility(const ReducibilityReport& rep) {
  Json points = Json::array();
  for (const ReducibilityPoint& p : rep.points)
    points.push_back({{"s", rational(p.s)},
                      {"structure", to_string(p.structure)},
                      {"trivial_subquotient", p.trivial_subquotient}});
  return {{"points", points},
          {"irreducible_elsewhere", rep.irreducible_elsewhere},
          {"extrapolated", rep.extrapolated}};
}

namespace {

Json character(const CharacterClass& c) {
  return {{"tag", to_string(c.tag)}, {"chi_D", to_string(c.chi_d)}};
}

}  // namespace

Json fj_consistency(const FjConsistency& c) {
  Json witnesses = Json::array();
  for (const FjWitness& w : c.witnesses)
    witnesses.push_back({{"chi", character(w.chi)}, {"s", rational(w.s)}});
  Json traces = Json::array();
  for (const auto& trace : c.traces) {
    Json steps = Json::array();
    for (const FjTraceStep& st : trace)
      steps.push_back({{"r", st.r}, {"chi", character(st.chi)}, {"candidates", rationals(st.candidates)}});
    traces.push_back(steps);
  }
  return {{"ok", c.ok}, {"witnesses", witnesses}, {"traces", traces}};
}

Json walls(const WallReport& w) {
  Json hits = Json::array();
  for (const WallHit& h : w.hits) hits.push_back(h.to_string());
  return hits;
}

Json global_poles(const GlobalPoleReport& rep) {
  Json poles = Json::array();
  for (const GlobalPole& p : rep.points)
    poles.push_back({{"s0", rational(p.s0)}, {"order", p.order}, {"residue", to_string(p.residue)}});
  Json rejected = Json::array();
  for (const RejectedCandidate& c : rep.rejected)
    rejected.push_back({{"s0", rational(c.s0)}, {"order", c.order}, {"walls", walls(c.walls)}});
  return {{"r", rep.r},
          {"d", rep.d},
          {"poles", poles},
          {"rejected", rejected},
          {"ledger", ledger(rep.ledger)},
          {"outside_main_theorem", rep.outside_main_theorem}};
}

Json pyramid(const PyramidReport& rep) {
  Json floors = Json::array();
  for (const auto& floor : rep.floors) {
    Json cells = Json::array();
    for (const PyramidCell& c : floor) cells.push_back({c.p, c.q});
    floors.push_back({{"t", floor.front().p + floor.front().q}, {"cells", cells}});
  }
  return {{"r", rep.r},
          {"i", rep.i},
          {"cell_count", rep.cells.size()},
          {"socle_floor", rep.socle_floor},
          {"cosocle_floor", rep.cosocle_floor},
          {"floors", floors}};
}

Json ktype(const KTypeCheck& k) {
  return {{"in_cone", k.in_cone}, {"highest_weight", k.highest_weight}};
}

Json envelope(const std::string& command, Json inputs, Json result) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"result", std::move(result)},
          {"version", FJT_VERSION}};
}

}  // namespace fjt::report
