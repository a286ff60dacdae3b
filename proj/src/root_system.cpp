#include "fjt/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "fjt/errors.hpp"
#include "fjt/kernels.hpp"

namespace fjt {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

std::string CartanType::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void validate(const CartanType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 2; break;
    case Family::D: ok = t.rank >= 3; break;
    case Family::E: ok = t.rank == 6 || t.rank == 7; break;
  }
  if (!ok)
    throw InvalidInput("invalid rank " + std::to_string(t.rank) + " for type " +
                       std::string(1, family_letter(t.family)));
}

CartanType parse_cartan_type(const std::string& family, int rank) {
  if (family.size() != 1)
    throw InvalidInput("unknown Cartan family '" + family + "'");
  CartanType t;
  switch (std::toupper(static_cast<unsigned char>(family[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    default: throw InvalidInput("unknown Cartan family '" + family + "'");
  }
  t.rank = rank;
  validate(t);
  return t;
}

namespace {

// Gram matrix (alpha_i, alpha_j) with short roots of squared length 2.
IntMatrix gram_matrix(const CartanType& t) {
  const int n = t.rank;
  IntMatrix g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 0; i < n; ++i) g[i][i] = i + 1 < n ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E:
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
  }
  return g;
}

IntMatrix cartan_from_gram(const IntMatrix& g) {
  const std::size_t n = g.size();
  IntMatrix a(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = 2 * g[i][j] / g[j][j];
  return a;
}

}  // namespace

IntMatrix cartan_matrix(const CartanType& t) {
  validate(t);
  return cartan_from_gram(gram_matrix(t));
}

// Root / Weight

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool Root::is_positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

Root Root::operator-() const {
  Root r{coords};
  for (int& c : r.coords) c = -c;
  return r;
}

std::string Root::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += fjt::to_string(coords[i]);
  }
  return out + ")";
}

Weight operator+(const Weight& a, const Weight& b) {
  if (a.coords.size() != b.coords.size())
    throw InvalidInput("weight rank mismatch");
  Weight w = a;
  for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] += b.coords[i];
  return w;
}

Weight operator-(const Weight& a) {
  Weight w = a;
  for (auto& c : w.coords) c = -c;
  return w;
}

Weight operator*(const Rational& k, const Weight& w) {
  Weight out = w;
  for (auto& c : out.coords) c *= k;
  return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  WeylElement w = a;
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  return w;
}

// RootSystem

RootSystem::RootSystem(const CartanType& t) : type_(t) {
  validate(t);
  gram_ = gram_matrix(t);
  cartan_ = cartan_from_gram(gram_);
  norm2_.resize(t.rank);
  for (int i = 0; i < t.rank; ++i) norm2_[i] = gram_[i][i];
  for (auto& c : kernels::positive_roots(cartan_)) {
    index_.emplace(c, positive_.size());
    positive_.push_back(Root{std::move(c)});
  }
}

bool RootSystem::simply_laced() const {
  return std::all_of(norm2_.begin(), norm2_.end(), [&](int v) { return v == norm2_[0]; });
}

std::optional<std::size_t> RootSystem::index_of(const Coords& c) const {
  auto it = index_.find(c);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Coords& c) const {
  if (index_.count(c)) return true;
  Coords neg = c;
  for (int& v : neg) v = -v;
  return index_.count(neg) > 0;
}

Root RootSystem::simple_root(int i) const {
  Root r{Coords(rank(), 0)};
  r.coords[i] = 1;
  return r;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  if (a.coords.size() != static_cast<std::size_t>(rank()) || b.coords.size() != a.coords.size())
    throw InvalidInput("root rank mismatch");
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a.coords[i] * gram_[i][j] * b.coords[j];
  }
  return s;
}

int RootSystem::coroot_pairing(const Root& a, const Root& b) const {
  int nb = inner(b, b);
  int num = 2 * inner(a, b);
  if (nb == 0 || num % nb != 0)
    throw InconsistentData("non-integral Cartan pairing between " + a.to_string() + " and " +
                           b.to_string());
  return num / nb;
}

Rational RootSystem::pairing(const Weight& w, const Root& alpha) const {
  if (w.coords.size() != static_cast<std::size_t>(rank()) ||
      alpha.coords.size() != static_cast<std::size_t>(rank()))
    throw InvalidInput("pairing rank mismatch");
  // alpha^vee = sum_i m_i (|alpha_i|^2 / |alpha|^2) alpha_i^vee
  const int na = inner(alpha, alpha);
  Rational s = 0;
  for (int i = 0; i < rank(); ++i)
    if (alpha.coords[i] != 0)
      s += w.coords[i] * Rational(alpha.coords[i] * norm2_[i], na);
  return s;
}

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = zero_weight();
  w.coords.at(i) = 1;
  return w;
}

Weight RootSystem::to_weight(const Root& alpha) const {
  Weight w = zero_weight();
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < rank(); ++k) w.coords[k] += alpha.coords[i] * cartan_[i][k];
  return w;
}

Weight RootSystem::zero_weight() const { return Weight{std::vector<Rational>(rank(), 0)}; }

Root RootSystem::reflect(int i, const Root& alpha) const {
  int p = 0;
  for (int k = 0; k < rank(); ++k) p += alpha.coords[k] * cartan_[k][i];
  Root r = alpha;
  r.coords[i] -= p;
  return r;
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  Weight out = w;
  const Rational p = w.coords[i];
  for (int k = 0; k < rank(); ++k) out.coords[k] -= p * cartan_[i][k];
  return out;
}

Root RootSystem::apply(const WeylElement& w, const Root& alpha) const {
  Root r = alpha;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = reflect(*it, r);
  return r;
}

Weight RootSystem::apply(const WeylElement& w, const Weight& lambda) const {
  Weight out = lambda;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) out = reflect(*it, out);
  return out;
}

Root RootSystem::highest_root() const {
  // Roots are sorted by height; the top one must be unique and dominant.
  const Root& top = positive_.back();
  if (positive_.size() > 1 && positive_[positive_.size() - 2].height() == top.height())
    throw InconsistentData("highest root is not unique in " + type_.name());
  for (int i = 0; i < rank(); ++i)
    if (coroot_pairing(top, simple_root(i)) < 0)
      throw InconsistentData("highest root is not dominant in " + type_.name());
  return top;
}

WeylElement RootSystem::longest_element(std::span<const int> nodes) const {
  std::vector<int> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  // Greedy descent: extend w by the lowest s_i with w(alpha_i) > 0.
  WeylElement w;
  for (;;) {
    bool extended = false;
    for (int i : sorted) {
      if (apply(w, simple_root(i)).is_positive()) {
        w.word.push_back(i);
        extended = true;
        break;
      }
    }
    if (!extended) return w;
  }
}

WeylElement RootSystem::longest_element() const {
  std::vector<int> all(rank());
  std::iota(all.begin(), all.end(), 0);
  return longest_element(all);
}

std::vector<Root> RootSystem::inversion_set(const WeylElement& w) const {
  const auto mask = kernels::inversion_mask(*this, w);
  std::vector<Root> out;
  for (std::size_t k = 0; k < positive_.size(); ++k)
    if (mask[k]) out.push_back(positive_[k]);
  return out;
}

std::vector<Root> RootSystem::subsystem_roots(std::span<const int> nodes) const {
  std::vector<char> in(rank(), 0);
  for (int i : nodes) in.at(i) = 1;
  std::vector<Root> out;
  for (const Root& r : positive_) {
    bool inside = true;
    for (int i = 0; i < rank(); ++i)
      if (r.coords[i] != 0 && !in[i]) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

Weight RootSystem::rho(std::span<const int> nodes) const {
  Weight w = zero_weight();
  for (const Root& r : subsystem_roots(nodes)) w = w + to_weight(r);
  return Rational(1, 2) * w;
}

// Subdiagrams

std::vector<std::vector<int>> connected_components(const RootSystem& rs,
                                                   std::span<const int> nodes) {
  std::vector<int> rest(nodes.begin(), nodes.end());
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(rs.rank(), 0);
  for (int start : rest) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int v : rest)
        if (!seen[v] && rs.cartan()[comp[k]][v] != 0) {
          seen[v] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

// Finds perm with cartan(canon k, canon l) == ambient(nodes[perm[k]], nodes[perm[l]]).
bool match_diagram(const IntMatrix& canon, const IntMatrix& ambient, std::span<const int> nodes,
                   std::vector<int>& perm) {
  const int n = static_cast<int>(canon.size());
  std::vector<char> used(n, 0);
  perm.assign(n, -1);
  std::function<bool(int)> place = [&](int k) {
    if (k == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = canon[k][k] == ambient[nodes[c]][nodes[c]];
      for (int l = 0; ok && l < k; ++l)
        ok = canon[k][l] == ambient[nodes[c]][nodes[perm[l]]] &&
             canon[l][k] == ambient[nodes[perm[l]]][nodes[c]];
      if (!ok) continue;
      used[c] = 1;
      perm[k] = c;
      if (place(k + 1)) return true;
      used[c] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace

Component identify_component(const RootSystem& rs, std::span<const int> nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 0) throw InconsistentData("empty subdiagram has no type");
  // A first so that C1, B1, D3 read as A1, A1, A3; C before B so that the
  // rank-2 double bond reads as C2.
  std::vector<CartanType> candidates{{Family::A, n}};
  if (n >= 4) candidates.push_back({Family::D, n});
  if (n == 6 || n == 7) candidates.push_back({Family::E, n});
  if (n >= 2) {
    candidates.push_back({Family::C, n});
    candidates.push_back({Family::B, n});
  }
  std::vector<int> perm;
  for (const CartanType& t : candidates) {
    if (match_diagram(cartan_matrix(t), rs.cartan(), nodes, perm)) {
      Component c{t, std::vector<int>(n)};
      for (int k = 0; k < n; ++k) c.nodes[k] = nodes[perm[k]];
      return c;
    }
  }
  throw InconsistentData("subdiagram of " + rs.type().name() + " matches no standard type");
}

std::string subdiagram_name(const RootSystem& rs, std::span<const int> nodes) {
  std::vector<CartanType> types;
  for (const auto& comp : connected_components(rs, nodes))
    types.push_back(identify_component(rs, comp).type);
  if (types.empty()) return "0";
  std::sort(types.begin(), types.end());
  std::string out;
  for (const auto& t : types) {
    if (!out.empty()) out += "x";
    out += t.name();
  }
  return out;
}

}  // namespace fjt
