#include "fjt/reducibility.hpp"

#include <algorithm>
#include <set>

#include "fjt/errors.hpp"

namespace fjt {

std::string to_string(ChiDTag t) {
  switch (t) {
    case ChiDTag::trivial: return "trivial";
    case ChiDTag::quadratic_field: return "quadratic_field";
    case ChiDTag::undefined: return "undefined";
  }
  return "?";
}

std::string to_string(CharTag t) {
  switch (t) {
    case CharTag::trivial: return "trivial";
    case CharTag::quadratic_nontrivial: return "quadratic_nontrivial";
    case CharTag::chi_D: return "chi_D";
    case CharTag::chi_K: return "chi_K";
  }
  return "?";
}

ChiDTag parse_chi_d(const std::string& text) {
  if (text == "trivial" || text == "1") return ChiDTag::trivial;
  if (text == "quadratic_field" || text == "chi_K" || text == "K") return ChiDTag::quadratic_field;
  if (text == "undefined" || text == "none") return ChiDTag::undefined;
  throw InvalidInput("unknown discriminant tag '" + text + "'");
}

CharTag parse_char(const std::string& text) {
  if (text == "trivial" || text == "1") return CharTag::trivial;
  if (text == "quadratic_nontrivial" || text == "quadratic") return CharTag::quadratic_nontrivial;
  if (text == "chi_D") return CharTag::chi_D;
  if (text == "chi_K") return CharTag::chi_K;
  throw InvalidInput("unknown character class '" + text + "'");
}

CharacterClass CharacterClass::canonical() const {
  if (tag == CharTag::chi_K && chi_d != ChiDTag::quadratic_field)
    throw InvalidInput("chi_K needs a quadratic-field discriminant");
  if (tag != CharTag::chi_D) return *this;
  switch (chi_d) {
    case ChiDTag::trivial: return {CharTag::trivial, chi_d};
    case ChiDTag::quadratic_field: return {CharTag::chi_K, chi_d};
    case ChiDTag::undefined: break;
  }
  throw InvalidInput("chi_D is not a character when d is odd");
}

CharacterClass twist_by_discriminant(const CharacterClass& chi) {
  const CharacterClass c = chi.canonical();
  if (c.chi_d != ChiDTag::quadratic_field) return c;
  switch (c.tag) {
    case CharTag::trivial: return {CharTag::chi_K, c.chi_d};
    case CharTag::chi_K: return {CharTag::trivial, c.chi_d};
    default: return c;  // a product of two distinct nontrivial classes stays nontrivial, != chi_K
  }
}

std::string to_string(Structure s) {
  switch (s) {
    case Structure::direct_sum_2: return "direct_sum_2";
    case Structure::nonsplit_length_2: return "nonsplit_length_2";
    case Structure::contains_trivial: return "contains_trivial";
  }
  return "?";
}

std::vector<Rational> ReducibilityReport::locations() const {
  std::vector<Rational> out;
  for (const auto& p : points) out.push_back(p.s);
  return out;
}

bool ReducibilityReport::symmetric() const {
  for (const auto& p : points) {
    auto it = std::find_if(points.begin(), points.end(),
                           [&](const ReducibilityPoint& q) { return q.s == -p.s; });
    if (it == points.end() || it->structure != p.structure ||
        it->trivial_subquotient != p.trivial_subquotient)
      return false;
  }
  return true;
}

namespace {

void add_pair(ReducibilityReport& rep, const Rational& s, Structure st, bool trivial) {
  if (s == 0) {
    rep.points.push_back({s, st, trivial});
    return;
  }
  rep.points.push_back({-s, st, trivial});
  rep.points.push_back({s, st, trivial});
}

void finish(ReducibilityReport& rep) {
  std::sort(rep.points.begin(), rep.points.end(),
            [](const ReducibilityPoint& a, const ReducibilityPoint& b) { return a.s < b.s; });
}

void check_discriminant(int d, ChiDTag chi_d) {
  if (d % 2 != 0 && chi_d != ChiDTag::undefined)
    throw InvalidInput("odd d has no discriminant character; use chi_D=undefined");
  if (d % 2 == 0 && chi_d == ChiDTag::undefined)
    throw InvalidInput("even d needs chi_D trivial or quadratic_field");
}

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::optional<FjParams> fj_image(int r, int d, const CharacterClass& chi, const Rational& s) {
  if (r < 1) throw InvalidInput("fj_image needs r >= 1");
  if (r == 1) return std::nullopt;
  return FjParams{r - 1, d, twist_by_discriminant(chi), s, r - 1 == 1 && d % 2 != 0};
}

ReducibilityReport sl2_reducibility(const CharacterClass& chi, bool metaplectic) {
  ReducibilityReport rep;
  if (metaplectic) add_pair(rep, Rational(1, 2), Structure::nonsplit_length_2, false);
  else if (chi.is_trivial()) add_pair(rep, Rational(1), Structure::nonsplit_length_2, true);
  else add_pair(rep, Rational(0), Structure::direct_sum_2, false);
  finish(rep);
  return rep;
}

std::vector<Rational> trivial_rep_points(int r, int d) {
  if (r < 1) throw InvalidInput("trivial_rep_points needs r >= 1");
  const Rational top = 1 + Rational((r - 1) * d, 2);
  return {-top, top};
}

ReducibilityReport reducibility_points(int r, int d, ChiDTag chi_d, const CharacterClass& chi_in) {
  if (r < 1) throw InvalidInput("reducibility needs r >= 1");
  if (d < 0) throw InvalidInput("reducibility needs d >= 0");
  const CharacterClass chi = chi_in.canonical();
  if (chi.chi_d != chi_d) throw InvalidInput("character class and discriminant tag disagree");
  if (r == 1) return sl2_reducibility(chi, false);

  check_discriminant(d, chi_d);
  ReducibilityReport rep;
  const bool trivial = chi.tag == CharTag::trivial;

  if (r == 2) {
    if (d < 1) throw OutOfScope("r=2 needs d >= 1");
    rep.extrapolated = d <= 2;
    if (d % 2 != 0) {
      // d = 2n - 1; metaplectic base
      add_pair(rep, Rational(1, 2), Structure::nonsplit_length_2, false);
      if (trivial) add_pair(rep, Rational(d + 2, 2), Structure::contains_trivial, true);
    } else if (chi_d == ChiDTag::trivial) {
      // d = 2n - 2
      const Rational n(d / 2 + 1);
      if (trivial) {
        add_pair(rep, Rational(1), Structure::nonsplit_length_2, false);
        add_pair(rep, n, Structure::nonsplit_length_2, true);
      } else {
        add_pair(rep, Rational(0), Structure::direct_sum_2, false);
      }
    } else {
      const Rational n(d / 2 + 1);
      if (chi.tag == CharTag::chi_K) {
        add_pair(rep, Rational(1), Structure::nonsplit_length_2, false);
      } else {
        add_pair(rep, Rational(0), Structure::direct_sum_2, false);
        if (trivial) add_pair(rep, n, Structure::contains_trivial, true);
      }
    }
    finish(rep);
    return rep;
  }

  if (d % 2 != 0)
    throw OutOfScope("r >= 3 with odd d: the discriminant character is undefined, outside the r > 2 theorem");
  if (chi_d != ChiDTag::trivial)
    throw OutOfScope("r >= 3 with nontrivial chi_D is outside the r > 2 theorem");
  if (trivial) {
    for (int k = 0; k < r; ++k)
      add_pair(rep, 1 + Rational(k * d, 2), Structure::nonsplit_length_2, k == r - 1);
  } else {
    add_pair(rep, Rational(0), Structure::direct_sum_2, false);
  }
  finish(rep);
  return rep;
}

namespace {

// C(1) = SL2 (or metaplectic) points; C(r, chi) = C(r-1, chi chi_D) plus the
// trivial-representation pair when chi is trivial.
std::vector<Rational> candidates_rec(int r, int d, const CharacterClass& chi, bool metaplectic,
                                     std::vector<FjTraceStep>* trace) {
  std::vector<Rational> out;
  if (r == 1) {
    out = sl2_reducibility(chi, metaplectic).locations();
  } else {
    const auto img = fj_image(r, d, chi, Rational(0));
    out = candidates_rec(img->r, d, img->chi, img->metaplectic, trace);
    if (chi.is_trivial())
      for (const Rational& s : trivial_rep_points(r, d)) out.push_back(s);
  }
  out = sorted_unique(std::move(out));
  if (trace) trace->insert(trace->begin(), FjTraceStep{r, chi, out});
  return out;
}

}  // namespace

std::vector<Rational> fj_candidates(int r, int d, ChiDTag chi_d, const CharacterClass& chi) {
  if (r < 1) throw InvalidInput("fj_candidates needs r >= 1");
  if (r >= 2) check_discriminant(d, chi_d);
  return candidates_rec(r, d, chi.canonical(), false, nullptr);
}

FjConsistency verify_fj_consistency(int r, int d, ChiDTag chi_d) {
  FjConsistency out;
  if (r < 1) throw InvalidInput("verify_fj_consistency needs r >= 1");
  if (r == 1) return out;  // SL2 is the base: nothing to transport

  std::vector<CharacterClass> chars{{CharTag::trivial, chi_d}, {CharTag::quadratic_nontrivial, chi_d}};
  if (chi_d == ChiDTag::quadratic_field) chars.push_back({CharTag::chi_K, chi_d});

  for (const CharacterClass& chi0 : chars) {
    // Fails with OutOfScope when (r, d, chi_d) is outside the theorems.
    const ReducibilityReport top = reducibility_points(r, d, chi_d, chi0);
    if (!top.symmetric()) out.witnesses.push_back({chi0, top.points.empty() ? Rational(0) : top.points.front().s});

    std::vector<FjTraceStep> trace;
    const auto cand = candidates_rec(r, d, chi0.canonical(), false, &trace);
    for (const Rational& s : top.locations())
      if (!std::binary_search(cand.begin(), cand.end(), s)) out.witnesses.push_back({chi0, s});

    // Level-by-level: points(level) \ trivial pair  subset of  points(level - 1).
    CharacterClass chi = chi0.canonical();
    ReducibilityReport cur = top;
    for (int level = r; level >= 2; --level) {
      const auto img = fj_image(level, d, chi, Rational(0));
      const ReducibilityReport next = img->r == 1
                                          ? sl2_reducibility(img->chi, img->metaplectic)
                                          : reducibility_points(img->r, d, chi_d, img->chi);
      const auto excluded = chi.is_trivial() ? trivial_rep_points(level, d) : std::vector<Rational>{};
      const auto below = next.locations();
      for (const Rational& s : cur.locations()) {
        if (std::find(excluded.begin(), excluded.end(), s) != excluded.end()) continue;
        if (!std::binary_search(below.begin(), below.end(), s)) out.witnesses.push_back({chi, s});
      }
      chi = img->chi;
      cur = next;
    }
    out.traces.push_back(std::move(trace));
  }
  out.ok = out.witnesses.empty();
  return out;
}

PyramidReport jantzen_pyramid(int r, int i) {
  if (r < 1) throw InvalidInput("pyramid needs r >= 1");
  if (i < 1 || i > r)
    throw InvalidInput("pyramid index i=" + std::to_string(i) + " outside 1.." + std::to_string(r));
  PyramidReport rep;
  rep.r = r;
  rep.i = i;
  rep.socle_floor = r;
  rep.cosocle_floor = r - i;
  for (int t = r - i; t <= r; ++t) {
    std::vector<PyramidCell> floor;
    for (int p = 0; p <= t; ++p) floor.push_back({p, t - p});
    rep.cells.insert(rep.cells.end(), floor.begin(), floor.end());
    rep.floors.push_back(std::move(floor));
  }
  return rep;
}

KTypeCheck cosocle_ktype_check(int r, int d, int p, int q, const std::vector<int>& a) {
  if (r < 1) throw InvalidInput("K-type check needs r >= 1");
  if (d % 4 != 0) throw InvalidInput("K-type check needs d divisible by 4");
  if (p < 0 || q < 0 || p + q > r - 1)
    throw InvalidInput("(p, q) must satisfy p, q >= 0 and p + q = r - i with 1 <= i <= r");
  if (a.size() != static_cast<std::size_t>(r))
    throw InvalidInput("K-type tuple needs " + std::to_string(r) + " entries");
  if (!std::is_sorted(a.begin(), a.end(), std::greater<int>()))
    throw InvalidInput("K-type tuple must be non-increasing");

  KTypeCheck out;
  out.in_cone = true;
  // a_{p+1} .. a_{r-q}, 1-based
  for (int k = p; k < r - q; ++k)
    if (a[k] != 0) out.in_cone = false;
  const int shift = (p - q) * (d / 4);
  for (int k = 0; k < r; ++k) out.highest_weight.push_back(shift + a[k]);
  return out;
}

}  // namespace fjt
