#include "fjt/jordan_data.hpp"

#include <algorithm>

#include "fjt/errors.hpp"

namespace fjt {

std::string to_string(CoordinateKind k) {
  switch (k) {
    case CoordinateKind::none: return "none";
    case CoordinateKind::quadratic_space: return "quadratic_space";
    case CoordinateKind::composition_algebra: return "composition_algebra";
  }
  return "?";
}

std::string ParabolicDatum::m_der() const { return subdiagram_name(*rs, levi_simple); }

ParabolicDatum make_parabolic(std::shared_ptr<const RootSystem> rs, int node) {
  if (node < 0 || node >= rs->rank())
    throw InvalidInput("node " + std::to_string(node + 1) + " out of range for " +
                       rs->type().name());
  ParabolicDatum pd;
  pd.node = node;
  for (int i = 0; i < rs->rank(); ++i)
    if (i != node) pd.levi_simple.push_back(i);
  for (const Root& a : rs->positive_roots())
    if (a.coords[node] > 0) pd.nilradical.push_back(a);
  pd.rs = std::move(rs);
  return pd;
}

bool is_abelian_self_opposite(const RootSystem& rs, int node) {
  if (rs.highest_root().coords[node] != 1) return false;
  const Root image = -rs.apply(rs.longest_element(), rs.simple_root(node));
  return image == rs.simple_root(node);
}

std::vector<ParabolicDatum> classify_abelian_parabolics(std::shared_ptr<const RootSystem> rs) {
  std::vector<ParabolicDatum> out;
  for (int j = 0; j < rs->rank(); ++j)
    if (is_abelian_self_opposite(*rs, j)) out.push_back(make_parabolic(rs, j));
  return out;
}

bool strongly_orthogonal(const RootSystem& rs, const Root& a, const Root& b) {
  if (a == b || a == -b) return false;
  Coords sum = a.coords, diff = a.coords;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] += b.coords[i];
    diff[i] -= b.coords[i];
  }
  return !rs.is_root(sum) && !rs.is_root(diff);
}

std::vector<Root> strongly_orthogonal_set(const ParabolicDatum& pd) {
  const RootSystem& rs = *pd.rs;
  std::vector<Root> chosen{rs.highest_root()};
  for (;;) {
    std::vector<const Root*> candidates;
    for (const Root& a : pd.nilradical) {
      bool ok = std::all_of(chosen.begin(), chosen.end(),
                            [&](const Root& b) { return strongly_orthogonal(rs, a, b); });
      if (ok) candidates.push_back(&a);
    }
    if (candidates.empty()) return chosen;
    // nilradical is height-sorted, so the last candidate is a highest one
    const Root* top = candidates.back();
    if (candidates.size() > 1 && candidates[candidates.size() - 2]->height() == top->height())
      throw InconsistentData("no unique highest strongly orthogonal root in " +
                             rs.type().name() + " after " + std::to_string(chosen.size()) +
                             " steps");
    chosen.push_back(*top);
  }
}

JordanDatum jordan_invariants(const ParabolicDatum& pd) {
  const RootSystem& rs = *pd.rs;
  JordanDatum jd;
  jd.strongly_orthogonal = strongly_orthogonal_set(pd);
  const int r = static_cast<int>(jd.strongly_orthogonal.size());
  jd.r = r;
  jd.pierce.assign(r, std::vector<std::vector<Root>>(r));

  // J_ij = { alpha : <alpha, beta_k^vee> = delta_ik + delta_jk for all k }
  for (const Root& a : pd.nilradical) {
    std::vector<int> hits;
    bool clean = true;
    for (int k = 0; k < r; ++k) {
      int p = rs.coroot_pairing(a, jd.strongly_orthogonal[k]);
      if (p == 2) hits.insert(hits.end(), {k, k});
      else if (p == 1) hits.push_back(k);
      else if (p != 0) clean = false;
    }
    if (!clean || hits.size() != 2)
      throw InconsistentData("root " + a.to_string() + " of " + rs.type().name() +
                             " lies in no Pierce piece");
    jd.pierce[hits[0]][hits[1]].push_back(a);
  }

  jd.pierce_dims.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j)
      jd.pierce_dims[i][j] = jd.pierce_dims[j][i] = static_cast<int>(jd.pierce[i][j].size());

  for (int i = 0; i < r; ++i)
    if (jd.pierce_dims[i][i] != 1)
      throw InconsistentData("diagonal Pierce piece J_" + std::to_string(i + 1) +
                             std::to_string(i + 1) + " is not one-dimensional");
  jd.d = r >= 2 ? jd.pierce_dims[0][1] : 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (jd.pierce_dims[i][j] != jd.d)
        throw InconsistentData("Pierce pieces of " + rs.type().name() +
                               " have unequal dimensions");
  if (jd.dim_n() != pd.dim_n())
    throw InconsistentData("Pierce grid does not add up to dim N");

  jd.kind = r == 1   ? CoordinateKind::none
            : r == 2 ? CoordinateKind::quadratic_space
                     : CoordinateKind::composition_algebra;
  return jd;
}

std::optional<FourierJacobiStep> fourier_jacobi_step(const ParabolicDatum& pd) {
  const RootSystem& rs = *pd.rs;
  if (strongly_orthogonal_set(pd).size() <= 1) return std::nullopt;

  const Root beta = rs.highest_root();
  std::vector<int> perp;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.coroot_pairing(rs.simple_root(i), beta) == 0) perp.push_back(i);

  std::vector<std::vector<int>> outside_m;
  for (auto& comp : connected_components(rs, perp))
    if (std::find(comp.begin(), comp.end(), pd.node) != comp.end())
      outside_m.push_back(comp);
  if (outside_m.size() != 1)
    throw InconsistentData("Heisenberg Levi of " + rs.type().name() + " has " +
                           std::to_string(outside_m.size()) + " factors outside M");

  const Component g1 = identify_component(rs, outside_m.front());
  const int node = static_cast<int>(
      std::find(g1.nodes.begin(), g1.nodes.end(), pd.node) - g1.nodes.begin());
  auto next_rs = std::make_shared<const RootSystem>(g1.type);
  if (!is_abelian_self_opposite(*next_rs, node))
    throw InconsistentData("tower step " + rs.type().name() + " -> " + g1.type.name() +
                           " lost the abelian self-opposite node");
  return FourierJacobiStep{make_parabolic(std::move(next_rs), node), subdiagram_name(rs, perp)};
}

TowerReport build_tower(const ParabolicDatum& pd) {
  TowerReport report;
  const int d_top = jordan_invariants(pd).d;
  std::optional<ParabolicDatum> cur = pd;
  while (cur) {
    const JordanDatum jd = jordan_invariants(*cur);
    if (!report.chain.empty() && jd.r != report.chain.back().r - 1)
      throw InconsistentData("tower step did not lower r by one");
    if (jd.r >= 2 && jd.d != d_top)
      throw InconsistentData("tower step changed d");
    auto step = fourier_jacobi_step(*cur);
    report.chain.push_back(TowerEntry{cur->rs->type(), cur->node, jd.r, d_top, cur->m_der(),
                                      step ? step->l_der : std::string()});
    if (step) cur = std::move(step->next);
    else cur.reset();
  }
  return report;
}

// Restricted roots

int RestrictedRootDatum::dim_n() const {
  int n = 0;
  for (const auto& a : positive_roots)
    if (a.in_nilradical) n += a.multiplicity;
  return n;
}

RestrictedRootDatum restricted_datum(int r, int d) {
  if (r < 1) throw InvalidInput("restricted datum needs r >= 1");
  if (d < 0) throw InvalidInput("restricted datum needs d >= 0");
  RestrictedRootDatum rrd;
  rrd.r = r;
  rrd.short_mult = d;
  auto e = [&](int i, int si, int j, int sj) {
    std::vector<int> v(r, 0);
    v[i] += si;
    if (j >= 0) v[j] += sj;
    return v;
  };
  for (int i = 0; i < r; ++i)
    rrd.positive_roots.push_back({e(i, 2, -1, 0), 1, true, true});
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      rrd.positive_roots.push_back({e(i, 1, j, 1), d, false, true});
      rrd.positive_roots.push_back({e(i, 1, j, -1), d, false, false});
    }
  return rrd;
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::split: return "split";
    case FormKind::quaternionic_anisotropic: return "quaternionic-anisotropic";
    case FormKind::anisotropic_quadratic: return "anisotropic-quadratic";
  }
  return "?";
}

FormKind parse_form_kind(const std::string& text) {
  if (text == "split") return FormKind::split;
  if (text == "quaternionic-anisotropic" || text == "quaternionic") return FormKind::quaternionic_anisotropic;
  if (text == "anisotropic-quadratic" || text == "anisotropic") return FormKind::anisotropic_quadratic;
  throw InvalidInput("unknown form kind '" + text + "'");
}

RestrictedRootDatum restricted_datum(const FormDatum& form) {
  const int r = form.r, d = form.d;
  if (r < 1) throw InvalidInput("form needs r >= 1");
  bool composition = d == 1 || d == 2 || d == 4 || d == 8;
  switch (form.kind) {
    case FormKind::split:
      if (r == 1 ? d != 0 : (r == 2 ? d < 1 : !composition))
        throw InvalidInput("no split form with r=" + std::to_string(r) + ", d=" + std::to_string(d));
      break;
    case FormKind::quaternionic_anisotropic:
      if (d != 4 || r < 2)
        throw InvalidInput("quaternionic forms need d = 4 and r >= 2");
      break;
    case FormKind::anisotropic_quadratic:
      if (d < 4 || d % 4 != 0 || r < 2 || (r >= 3 && !composition))
        throw InvalidInput("anisotropic quadratic forms need d divisible by 4 (d in {4, 8} when r >= 3)");
      break;
  }
  return restricted_datum(r, d);
}

}  // namespace fjt
