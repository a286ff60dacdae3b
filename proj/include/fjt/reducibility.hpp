#ifndef FJT_REDUCIBILITY_HPP_
#define FJT_REDUCIBILITY_HPP_

// Local reducibility of the degenerate principal series I(chi, s), quadratic
// chi, s real.
//
// Two independent routes:
//   reducibility_points  encodes the classification theorems as rules;
//   fj_candidates        re-derives a candidate set by walking the
//                        Fourier-Jacobi tower down to SL2 (or its metaplectic
//                        cover when d is odd) and adding the trivial
//                        representation point at each level.
// verify_fj_consistency checks the first against the second.

#include <optional>
#include <string>
#include <vector>

#include "fjt/rational.hpp"

namespace fjt {

// Discriminant character of D: trivial, the character of a quadratic field
// K, or undefined (d odd: not a character of k^x).
enum class ChiDTag { trivial, quadratic_field, undefined };

// Quadratic characters up to the distinctions the theorems make.
//   trivial
//   quadratic_nontrivial : nontrivial and different from chi_K
//   chi_D                : equal to the discriminant character of D
//   chi_K                : the character of K (needs chi_D = quadratic_field)
enum class CharTag { trivial, quadratic_nontrivial, chi_D, chi_K };

std::string to_string(ChiDTag t);
std::string to_string(CharTag t);
ChiDTag parse_chi_d(const std::string& text);
CharTag parse_char(const std::string& text);

struct CharacterClass {
  CharTag tag = CharTag::trivial;
  ChiDTag chi_d = ChiDTag::trivial;

  // chi_D resolved to trivial or chi_K. Throws InvalidInput on chi_K without
  // a quadratic-field discriminant.
  CharacterClass canonical() const;
  bool is_trivial() const { return canonical().tag == CharTag::trivial; }
  friend bool operator==(const CharacterClass& a, const CharacterClass& b) {
    auto x = a.canonical(), y = b.canonical();
    return x.tag == y.tag && x.chi_d == y.chi_d;
  }
};

// chi * chi_D.
CharacterClass twist_by_discriminant(const CharacterClass& chi);

enum class Structure { direct_sum_2, nonsplit_length_2, contains_trivial };
std::string to_string(Structure s);

struct ReducibilityPoint {
  Rational s;
  Structure structure = Structure::nonsplit_length_2;
  bool trivial_subquotient = false;

  friend bool operator==(const ReducibilityPoint&, const ReducibilityPoint&) = default;
};

struct ReducibilityReport {
  std::vector<ReducibilityPoint> points;  // increasing s
  bool irreducible_elsewhere = true;
  // r = 2 with d in {1, 2}: the case formulas applied below their dim D > 2
  // hypothesis.
  bool extrapolated = false;

  std::vector<Rational> locations() const;
  // Same structure at s and -s for every point.
  bool symmetric() const;
};

struct FjParams {
  int r = 0;
  int d = 0;
  CharacterClass chi;
  Rational s;
  bool metaplectic = false;  // the next group is the two-fold cover of SL2
};

// (r, d, chi, s) -> (r-1, d, chi*chi_D, s); nullopt at r == 1.
std::optional<FjParams> fj_image(int r, int d, const CharacterClass& chi, const Rational& s);

ReducibilityReport sl2_reducibility(const CharacterClass& chi, bool metaplectic);

// In scope: r == 1; r == 2 with d >= 1; r >= 3 with chi_D trivial and d
// even. Anything else throws OutOfScope.
ReducibilityReport reducibility_points(int r, int d, ChiDTag chi_d, const CharacterClass& chi);

// +-(1 + (r-1)d/2)
std::vector<Rational> trivial_rep_points(int r, int d);

// Candidate reducibility points from the tower recursion.
std::vector<Rational> fj_candidates(int r, int d, ChiDTag chi_d, const CharacterClass& chi);

struct FjTraceStep {
  int r = 0;
  CharacterClass chi;
  std::vector<Rational> candidates;
};

struct FjWitness {
  CharacterClass chi;
  Rational s;  // a rule point missing from the recursion candidates
};

struct FjConsistency {
  bool ok = true;
  std::vector<FjWitness> witnesses;
  // For each character checked, the recursion from r down to 1.
  std::vector<std::vector<FjTraceStep>> traces;
};

// Runs every character class relevant to chi_d. At each level checks
// points(r) minus the trivial-representation pair against the rule points of
// the Fourier-Jacobi image, down to SL2, and checks points(r) against
// fj_candidates.
FjConsistency verify_fj_consistency(int r, int d, ChiDTag chi_d);

// Real groups: truncated pyramid of subquotients V_{p,q}, r-i <= p+q <= r.
struct PyramidCell {
  int p = 0;
  int q = 0;
};

struct PyramidReport {
  int r = 0;
  int i = 0;
  std::vector<PyramidCell> cells;             // sorted by (t, p)
  std::vector<std::vector<PyramidCell>> floors;  // floors[k] holds t = r-i+k
  int socle_floor = 0;    // t = r
  int cosocle_floor = 0;  // t = r - i
};

PyramidReport jantzen_pyramid(int r, int i);

struct KTypeCheck {
  bool in_cone = false;
  std::vector<int> highest_weight;  // coefficients on gamma_1..gamma_r
};

// K-types of the co-socle quotient V_{p,q}:
//   (p-q)(d/4)(1,...,1) + a, with a_{p+1} = ... = a_{r-q} = 0.
KTypeCheck cosocle_ktype_check(int r, int d, int p, int q, const std::vector<int>& a);

}  // namespace fjt

#endif  // FJT_REDUCIBILITY_HPP_
