#include "fjt/kernels.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <set>

#include <omp.h>

#include "fjt/errors.hpp"

namespace fjt::kernels {

namespace {

int height(const Coords& c) {
  int h = 0;
  for (int v : c) h += v;
  return h;
}

void sort_graded(std::vector<Coords>& roots) {
  std::sort(roots.begin(), roots.end(), [](const Coords& a, const Coords& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
}

std::vector<Coords> simple_roots(std::size_t n) {
  std::vector<Coords> out(n, Coords(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

int pairing_with_simple_coroot(const IntMatrix& cartan, const Coords& a, std::size_t i) {
  int p = 0;
  for (std::size_t k = 0; k < a.size(); ++k) p += a[k] * cartan[k][i];
  return p;
}

AffineArg affine_pairing(const RootSystem& rs, const Weight& slope, const Weight& offset,
                         const Root& root) {
  Rational k = rs.pairing(slope, root);
  if (!is_integer(k) || k <= 0)
    throw InconsistentData("slope pairing " + to_string(k) + " with " + root.to_string() +
                           " is not a positive integer");
  return AffineArg{static_cast<int>(k.numerator()), rs.pairing(offset, root)};
}

// Rethrows the first captured exception, by loop index.
void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

// Height-by-height growth. For a root a of height h and a simple index i,
// the alpha_i-string through a is a - p*alpha_i .. a + q*alpha_i with
// p - q = <a, alpha_i^vee>; a + alpha_i is a root iff q > 0. Every (a, i)
// pair of a level is independent.
std::vector<Coords> positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::set<Coords> known;
  std::vector<Coords> level = simple_roots(n);
  std::vector<Coords> all;
  while (!level.empty()) {
    known.insert(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
    const long pairs = static_cast<long>(level.size() * n);
    std::vector<std::optional<Coords>> grown(pairs);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < pairs; ++idx) {
      const Coords& a = level[idx / n];
      const std::size_t i = idx % n;
      int p = 0;
      Coords down = a;
      while (down[i] > 0) {
        --down[i];
        if (!known.count(down)) break;
        ++p;
      }
      if (p - pairing_with_simple_coroot(cartan, a, i) > 0) {
        Coords up = a;
        ++up[i];
        grown[idx] = std::move(up);
      }
    }
    std::vector<Coords> next;
    for (auto& g : grown)
      if (g) next.push_back(std::move(*g));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  sort_graded(all);
  return all;
}

std::vector<char> inversion_mask(const RootSystem& rs, const WeylElement& w) {
  const auto& roots = rs.positive_roots();
  const long n = static_cast<long>(roots.size());
  std::vector<char> mask(n, 0);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) mask[k] = rs.apply(w, roots[k]).is_positive() ? 0 : 1;
  return mask;
}

std::vector<AffineArg> affine_pairings(const RootSystem& rs, const Weight& slope,
                                       const Weight& offset, std::span<const Root> roots) {
  const long n = static_cast<long>(roots.size());
  std::vector<AffineArg> out(n);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    try {
      out[k] = affine_pairing(rs, slope, offset, roots[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return out;
}

std::vector<int> ledger_orders(const ZetaProduct& zp, const ZetaProfile& profile,
                               std::span<const Rational> points) {
  const long n = static_cast<long>(points.size());
  std::vector<int> out(n, 0);
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    try {
      out[k] = pole_order_at(zp, profile, points[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return out;
}

namespace serial {

// Closure of the simple roots under simple reflections; s_i permutes the
// positive roots other than alpha_i.
std::vector<Coords> positive_roots(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  std::vector<Coords> all = simple_roots(n);
  std::set<Coords> seen(all.begin(), all.end());
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Coords a = all[k];
      if (height(a) == 1 && a[i] == 1) continue;
      a[i] -= pairing_with_simple_coroot(cartan, a, i);
      if (seen.insert(a).second) all.push_back(std::move(a));
    }
  }
  sort_graded(all);
  return all;
}

std::vector<char> inversion_mask(const RootSystem& rs, const WeylElement& w) {
  std::vector<char> mask;
  mask.reserve(rs.positive_roots().size());
  for (const Root& r : rs.positive_roots()) mask.push_back(rs.apply(w, r).is_positive() ? 0 : 1);
  return mask;
}

std::vector<AffineArg> affine_pairings(const RootSystem& rs, const Weight& slope,
                                       const Weight& offset, std::span<const Root> roots) {
  std::vector<AffineArg> out;
  out.reserve(roots.size());
  for (const Root& r : roots) out.push_back(affine_pairing(rs, slope, offset, r));
  return out;
}

std::vector<int> ledger_orders(const ZetaProduct& zp, const ZetaProfile& profile,
                               std::span<const Rational> points) {
  std::vector<int> out;
  out.reserve(points.size());
  for (const Rational& p : points) out.push_back(pole_order_at(zp, profile, p));
  return out;
}

}  // namespace serial

}  // namespace fjt::kernels
