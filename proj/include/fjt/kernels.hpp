#ifndef FJT_KERNELS_HPP_
#define FJT_KERNELS_HPP_

// Data-parallel inner loops. Each kernel has an OpenMP version (used by the
// library) and a serial reference in kernels::serial kept for the tests and
// the benchmark. The two are required to return identical results.
//
// positive_roots is the one place where the two sides are different
// algorithms: the parallel version grows roots height by height with root
// strings, the reference closes the simple roots under reflections.

#include <span>
#include <vector>

#include "fjt/root_system.hpp"
#include "fjt/zeta.hpp"

namespace fjt::kernels {

// Positive roots in simple-root coordinates, sorted by (height, coords).
std::vector<Coords> positive_roots(const IntMatrix& cartan);

// mask[k] != 0 iff w sends positive root k to a negative root.
std::vector<char> inversion_mask(const RootSystem& rs, const WeylElement& w);

// <slope*s + offset, alpha^vee> for each root, as AffineArg(k, c).
// Throws InconsistentData if a slope pairing is not a positive integer.
std::vector<AffineArg> affine_pairings(const RootSystem& rs, const Weight& slope,
                                       const Weight& offset, std::span<const Root> roots);

// pole_order_at for each candidate point.
std::vector<int> ledger_orders(const ZetaProduct& zp, const ZetaProfile& profile,
                               std::span<const Rational> points);

namespace serial {

std::vector<Coords> positive_roots(const IntMatrix& cartan);
std::vector<char> inversion_mask(const RootSystem& rs, const WeylElement& w);
std::vector<AffineArg> affine_pairings(const RootSystem& rs, const Weight& slope,
                                       const Weight& offset, std::span<const Root> roots);
std::vector<int> ledger_orders(const ZetaProduct& zp, const ZetaProfile& profile,
                               std::span<const Rational> points);

}  // namespace serial

int max_threads();

}  // namespace fjt::kernels

#endif  // FJT_KERNELS_HPP_
