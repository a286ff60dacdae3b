#include "fjt/eisenstein.hpp"

#include <algorithm>
#include <limits>

#include "fjt/cfunction.hpp"
#include "fjt/errors.hpp"

namespace fjt {

ChiSCoordinates chi_s_coords(int r, int d, const Rational& s) {
  if (r < 1) throw InvalidInput("chi_s needs r >= 1");
  ChiSCoordinates c{r, d, s, {}};
  for (int i = 1; i <= r; ++i) c.coords.push_back(s + Rational(d * (2 * i - 1 - r), 2));
  return c;
}

std::vector<Rational> rho_coords(int r, int d) {
  if (r < 1) throw InvalidInput("rho needs r >= 1");
  std::vector<Rational> out;
  for (int i = 1; i <= r; ++i) out.push_back(Rational(1 + (r - i) * d));
  return out;
}

std::string WallHit::to_string() const {
  const std::string si = "s" + std::to_string(i);
  const std::string sj = "s" + std::to_string(j);
  switch (kind) {
    case Kind::zero: return si + " = 0";
    case Kind::difference: return si + " - " + sj + " = 0";
    case Kind::sum: return si + " + " + sj + " = 0";
  }
  return "?";
}

WallReport wall_check(const ChiSCoordinates& c) {
  WallReport rep;
  const auto& x = c.coords;
  const int n = static_cast<int>(x.size());
  for (int i = 0; i < n; ++i)
    if (x[i] == 0) rep.hits.push_back({WallHit::Kind::zero, i + 1, 0});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (x[i] == x[j]) rep.hits.push_back({WallHit::Kind::difference, i + 1, j + 1});
      if (x[i] + x[j] == 0) rep.hits.push_back({WallHit::Kind::sum, i + 1, j + 1});
    }
  return rep;
}

std::string to_string(Residue r) {
  return r == Residue::trivial_representation ? "trivial_representation"
                                              : "cosocle_square_integrable";
}

std::vector<Rational> GlobalPoleReport::locations() const {
  std::vector<Rational> out;
  for (const auto& p : points) out.push_back(p.s0);
  return out;
}

GlobalPoleReport global_pole_ledger(int r, int d, ChiDTag chi_d, bool local_factors_nonvanishing) {
  if (r < 1) throw InvalidInput("pole ledger needs r >= 1");
  if (d < 0) throw InvalidInput("pole ledger needs d >= 0");
  const bool base = r == 1 && d == 0;
  if (!base) {
    if (r == 1) throw InvalidInput("r = 1 carries no d; use d = 0");
    if (d % 4 != 0) throw OutOfScope("main theorem needs d divisible by 4, got d=" + std::to_string(d));
    if (chi_d != ChiDTag::trivial) throw OutOfScope("main theorem needs trivial chi_D");
    if (!local_factors_nonvanishing)
      throw OutOfScope("main theorem needs nonvanishing local factors at the bad places");
  }

  GlobalPoleReport rep;
  rep.r = r;
  rep.d = d;
  rep.outside_main_theorem = base;

  const ZetaProduct c = closed_form_c(r, d);
  const Window window{Rational(0), Rational(2 + r * d)};
  const PoleLedger full = full_ledger(c, ZetaProfile::global(), window);
  for (const LedgerEntry& e : full.entries)
    if (e.location > 0) rep.ledger.entries.push_back(e);

  const Rational top = 1 + Rational((r - 1) * d, 2);
  for (const LedgerEntry& e : rep.ledger.entries) {
    if (e.order <= 0) continue;
    WallReport walls = wall_check(chi_s_coords(r, d, e.location));
    if (!walls.regular()) {
      rep.rejected.push_back({e.location, e.order, std::move(walls)});
      continue;
    }
    if (e.order > 1)
      throw InconsistentData("pole of order " + std::to_string(e.order) + " at s0=" +
                             fjt::to_string(e.location));
    rep.points.push_back({e.location, e.order,
                          e.location == top ? Residue::trivial_representation
                                            : Residue::cosocle_square_integrable});
  }
  return rep;
}

std::vector<Rational> possible_pole_candidates(int r, int d, ChiDTag chi_d, const CharacterClass& chi_in) {
  if (r < 1) throw InvalidInput("pole candidates need r >= 1");
  if (d < 0) throw InvalidInput("pole candidates need d >= 0");
  const CharacterClass chi = chi_in.canonical();
  const bool trivial = chi.tag == CharTag::trivial;
  std::vector<Rational> out;

  if (r == 2 && d % 2 != 0) {
    // d = 2n - 1
    out.push_back(Rational(1, 2));
    if (trivial) out.push_back(Rational(d + 2, 2));
    return out;
  }
  if (r == 2 && chi_d == ChiDTag::quadratic_field) {
    // d = 2n - 2
    if (chi.tag == CharTag::chi_K) out.push_back(Rational(1));
    if (trivial) out.push_back(Rational(d / 2 + 1));
    return out;
  }
  if (chi_d != ChiDTag::trivial && r >= 2)
    throw OutOfScope("pole candidates for r >= 3 need trivial chi_D");
  if (d % 2 != 0 && r >= 3) throw OutOfScope("pole candidates for r >= 3 need even d");
  if (trivial)
    for (int k = 0; k < r; ++k) out.push_back(1 + Rational(k * d, 2));
  return out;
}

Rational unramified_fj_factor(int r, int d, int chi_value, int q, const Rational& s) {
  if (r < 1 || d < 0) throw InvalidInput("unramified factor needs r >= 1, d >= 0");
  if (chi_value == 0) throw OutOfScope("ramified character: no unramified factor");
  if (chi_value != 1 && chi_value != -1) throw InvalidInput("chi at the uniformizer must be +1 or -1");
  (void)ZetaProfile::padic(q);  // validates the prime power
  const Rational e = s + 1 + Rational((r - 1) * d, 2);
  if (!is_integer(e))
    throw OutOfScope("q^-(" + to_string(e) + ") is not rational");
  const std::int64_t n = e.numerator() < 0 ? -e.numerator() : e.numerator();
  std::int64_t power = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (power > std::numeric_limits<std::int64_t>::max() / q)
      throw OutOfScope("q^" + std::to_string(n) + " exceeds exact 64-bit range");
    power *= q;
  }
  const Rational term = e.numerator() >= 0 ? Rational(1, power) : Rational(power);
  return 1 - chi_value * term;
}

}  // namespace fjt
