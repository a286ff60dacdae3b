#ifndef FJT_ROOT_SYSTEM_HPP_
#define FJT_ROOT_SYSTEM_HPP_

// Exact root data for the simple types A, B, C, D, E6, E7.
//
// Roots are integer vectors of simple-root coefficients; weights are rational
// vectors in the fundamental-weight basis. Simple roots are labelled in the
// Bourbaki order, 0-based in code (node k here is alpha_{k+1} in print).
// Nothing in this module uses floating point.

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fjt/rational.hpp"

namespace fjt {

enum class Family { A, B, C, D, E };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "E7", "C3"
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

char family_letter(Family f);
// Parses "A".."E" (case-insensitive) and validates the rank bounds.
CartanType parse_cartan_type(const std::string& family, int rank);
// Throws InvalidInput unless A>=1, B>=2, C>=2, D>=3, E in {6,7}.
void validate(const CartanType& t);

using IntMatrix = std::vector<std::vector<int>>;
using Coords = std::vector<int>;

// Cartan integers a[i][j] = <alpha_i, alpha_j^vee> for the Bourbaki labelling.
IntMatrix cartan_matrix(const CartanType& t);

struct Root {
  Coords coords;

  int height() const;
  bool is_positive() const;
  Root operator-() const;
  std::string to_string() const;  // "a1+a2+2a3"
  friend auto operator<=>(const Root&, const Root&) = default;
};

struct Weight {
  std::vector<Rational> coords;

  std::string to_string() const;
  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Rational& k, const Weight& w);

// A word s_{i_1} s_{i_2} ... s_{i_n}; acts on the right-most letter first.
// Reduced words are not required.
struct WeylElement {
  std::vector<int> word;

  std::size_t length() const { return word.size(); }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

// Composition: (a * b)(x) = a(b(x)).
WeylElement operator*(const WeylElement& a, const WeylElement& b);

class RootSystem {
 public:
  explicit RootSystem(const CartanType& t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const IntMatrix& cartan() const { return cartan_; }
  // (alpha_i, alpha_i), scaled so short roots have 2.
  int norm2(int i) const { return norm2_[i]; }
  bool simply_laced() const;

  const std::vector<Root>& positive_roots() const { return positive_; }
  std::optional<std::size_t> index_of(const Coords& c) const;
  bool is_root(const Coords& c) const;
  Root simple_root(int i) const;

  int inner(const Root& a, const Root& b) const;
  // <a, b^vee> = 2(a,b)/(b,b).
  int coroot_pairing(const Root& a, const Root& b) const;
  Rational pairing(const Weight& w, const Root& alpha) const;

  Weight fundamental_weight(int i) const;
  Weight to_weight(const Root& alpha) const;
  Weight zero_weight() const;

  Root reflect(int i, const Root& alpha) const;
  Weight reflect(int i, const Weight& w) const;
  Root apply(const WeylElement& w, const Root& alpha) const;
  Weight apply(const WeylElement& w, const Weight& lambda) const;

  Root highest_root() const;
  // Longest element of the parabolic subgroup generated by `nodes`.
  WeylElement longest_element(std::span<const int> nodes) const;
  WeylElement longest_element() const;
  std::vector<Root> inversion_set(const WeylElement& w) const;

  // Positive roots supported on `nodes`, and half their sum.
  std::vector<Root> subsystem_roots(std::span<const int> nodes) const;
  Weight rho(std::span<const int> nodes) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  IntMatrix gram_;
  std::vector<int> norm2_;
  std::vector<Root> positive_;
  std::map<Coords, std::size_t> index_;
};

inline RootSystem build_root_system(const CartanType& t) { return RootSystem(t); }

// Dynkin-subdiagram utilities used by the classifier and the tower.

std::vector<std::vector<int>> connected_components(const RootSystem& rs,
                                                   std::span<const int> nodes);

// A connected subdiagram identified with a standard type: `nodes[k]` is the
// ambient node playing the role of canonical node k.
struct Component {
  CartanType type;
  std::vector<int> nodes;
};

// Throws InconsistentData when no standard type matches.
Component identify_component(const RootSystem& rs, std::span<const int> nodes);

// "A1xA1", "E6", or "0" for the empty diagram. Factors sorted by name.
std::string subdiagram_name(const RootSystem& rs, std::span<const int> nodes);

}  // namespace fjt

#endif  // FJT_ROOT_SYSTEM_HPP_
