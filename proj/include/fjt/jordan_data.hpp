#ifndef FJT_JORDAN_DATA_HPP_
#define FJT_JORDAN_DATA_HPP_

// Maximal parabolics with abelian, self-opposite unipotent radical, the
// Jordan invariants (r, d) of the radical, and the Fourier-Jacobi tower.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fjt/root_system.hpp"

namespace fjt {

struct ParabolicDatum {
  std::shared_ptr<const RootSystem> rs;
  int node = 0;                    // marked simple root j
  std::vector<int> levi_simple;    // the other simple roots
  std::vector<Root> nilradical;    // positive roots with m_j > 0

  int dim_n() const { return static_cast<int>(nilradical.size()); }
  // Derived Levi, e.g. "E6", "A1xA1", "0".
  std::string m_der() const;
};

// Which kind of coordinate space D the radical carries.
enum class CoordinateKind { none, quadratic_space, composition_algebra };
std::string to_string(CoordinateKind k);

struct JordanDatum {
  int r = 0;
  int d = 0;  // 0 when r == 1
  std::vector<Root> strongly_orthogonal;
  // pierce[i][j] (i <= j): nilradical roots in J_ij.
  std::vector<std::vector<std::vector<Root>>> pierce;
  std::vector<std::vector<int>> pierce_dims;  // symmetric
  CoordinateKind kind = CoordinateKind::none;

  int dim_n() const { return r + r * (r - 1) * d / 2; }
};

// The datum for node j, without checking the abelian/self-opposite conditions.
ParabolicDatum make_parabolic(std::shared_ptr<const RootSystem> rs, int node);
// m_j(highest root) == 1 and -w_G(alpha_j) == alpha_j.
bool is_abelian_self_opposite(const RootSystem& rs, int node);

std::vector<ParabolicDatum> classify_abelian_parabolics(std::shared_ptr<const RootSystem> rs);

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b);

// beta_1 = highest root; beta_{i+1} = highest nilradical root strongly
// orthogonal to beta_1..beta_i.
std::vector<Root> strongly_orthogonal_set(const ParabolicDatum& pd);

// Throws InconsistentData if the Pierce grid does not cover the radical or
// the off-diagonal pieces differ in size.
JordanDatum jordan_invariants(const ParabolicDatum& pd);

struct FourierJacobiStep {
  ParabolicDatum next;
  std::string l_der;  // Levi of the Heisenberg parabolic, e.g. "A1xD4"
};

// nullopt at the terminal SL2 (r == 1).
std::optional<FourierJacobiStep> fourier_jacobi_step(const ParabolicDatum& pd);

struct TowerEntry {
  CartanType type;
  int node = 0;
  int r = 0;
  int d = 0;  // the d of the top of the tower, constant along the chain
  std::string m_der;
  std::string l_der;  // "" at the terminal entry
};

struct TowerReport {
  std::vector<TowerEntry> chain;
};

TowerReport build_tower(const ParabolicDatum& pd);

// Restricted root system of type C_r relative to the split torus T_r.
struct RestrictedRoot {
  std::vector<int> coords;  // in the e_1..e_r basis
  int multiplicity = 1;
  bool long_root = false;
  bool in_nilradical = false;  // e_i + e_j and 2 e_i
};

struct RestrictedRootDatum {
  int r = 0;
  int short_mult = 0;
  int long_mult = 1;
  std::vector<RestrictedRoot> positive_roots;

  int dim_n() const;
};

RestrictedRootDatum restricted_datum(int r, int d);

// Forms given as data (r, d, kind) instead of by Galois descent.
enum class FormKind { split, quaternionic_anisotropic, anisotropic_quadratic };
std::string to_string(FormKind k);
FormKind parse_form_kind(const std::string& text);

struct FormDatum {
  int r = 0;
  int d = 0;
  FormKind kind = FormKind::split;
};

// Throws InvalidInput for combinations that name no group here.
RestrictedRootDatum restricted_datum(const FormDatum& form);

}  // namespace fjt

#endif  // FJT_JORDAN_DATA_HPP_
