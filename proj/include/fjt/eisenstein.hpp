#ifndef FJT_EISENSTEIN_HPP_
#define FJT_EISENSTEIN_HPP_

// Global poles of the degenerate Eisenstein series E(s): the pole ledger of
// the closed c-function under the completed global zeta, filtered by the
// wall-regularity test that rules out cancellation between constant-term
// summands.

#include <string>
#include <vector>

#include "fjt/rational.hpp"
#include "fjt/reducibility.hpp"
#include "fjt/zeta.hpp"

namespace fjt {

// s_i = s + (d/2)(2i - 1 - r), i = 1..r
struct ChiSCoordinates {
  int r = 0;
  int d = 0;
  Rational s;
  std::vector<Rational> coords;
};

ChiSCoordinates chi_s_coords(int r, int d, const Rational& s);

// (1 + (r-1)d, ..., 1 + d, 1)
std::vector<Rational> rho_coords(int r, int d);

struct WallHit {
  enum class Kind { zero, difference, sum };
  Kind kind = Kind::zero;
  int i = 0;  // 1-based
  int j = 0;  // 1-based, unused for zero

  std::string to_string() const;  // "s1 = 0", "s1 - s2 = 0", "s1 + s3 = 0"
  friend bool operator==(const WallHit&, const WallHit&) = default;
};

struct WallReport {
  std::vector<WallHit> hits;
  bool regular() const { return hits.empty(); }
};

WallReport wall_check(const ChiSCoordinates& c);

enum class Residue { trivial_representation, cosocle_square_integrable };
std::string to_string(Residue r);

struct GlobalPole {
  Rational s0;
  int order = 1;
  Residue residue = Residue::cosocle_square_integrable;
};

struct RejectedCandidate {
  Rational s0;
  int order = 0;
  WallReport walls;
};

struct GlobalPoleReport {
  int r = 0;
  int d = 0;
  std::vector<GlobalPole> points;         // increasing s0
  std::vector<RejectedCandidate> rejected;  // ledger poles on a wall
  PoleLedger ledger;                      // closed c-function, global profile, s > 0
  bool outside_main_theorem = false;      // the (r, d) = (1, 0) base

  std::vector<Rational> locations() const;
};

// Refuses (OutOfScope) unless d is divisible by 4, chi_D is trivial and the
// local factors at the bad places are declared nonvanishing. (1, 0) is
// computed and flagged. Throws InconsistentData on a retained pole of order
// above 1.
GlobalPoleReport global_pole_ledger(int r, int d, ChiDTag chi_d, bool local_factors_nonvanishing);

// Positive points where E(s) may have a pole, by the case analysis on
// (r, d, chi_D, chi).
std::vector<Rational> possible_pole_candidates(int r, int d, ChiDTag chi_d, const CharacterClass& chi);

// 1 - chi(uniformizer) q^{-(s + 1 + (r-1)d/2)} exactly. chi_value = 0 stands
// for a ramified character and is refused.
Rational unramified_fj_factor(int r, int d, int chi_value, int q, const Rational& s);

}  // namespace fjt

#endif  // FJT_EISENSTEIN_HPP_
