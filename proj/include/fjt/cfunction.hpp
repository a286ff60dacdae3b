#ifndef FJT_CFUNCTION_HPP_
#define FJT_CFUNCTION_HPP_

// c-functions of the standard intertwining operator I(s) -> I(-s) on the
// spherical vector, computed three ways:
//   - Gindikin-Karpelevich product over the inversion set of w0 = w_G w_M,
//   - the closed products for the split and quaternionic cases,
//   - rank-one factorisation over the restricted C_r system.

#include <span>
#include <vector>

#include "fjt/jordan_data.hpp"
#include "fjt/zeta.hpp"

namespace fjt {

// lambda_s = s * slope + offset, with slope = omega_j and offset = -rho_M.
struct DegenerateCharacter {
  Weight slope;
  Weight offset;
};

DegenerateCharacter degenerate_character(const RootSystem& rs, int node);

// w_G * w_M for the maximal parabolic at `node`.
WeylElement parabolic_w0(const RootSystem& rs, int node);

// Product of zeta(<lambda_s, a^vee>) / zeta(<lambda_s, a^vee> + 1) over the
// inversion set of w0, one factor pair per root, uncancelled.
ZetaProduct gk_product_raw(const RootSystem& rs, int node);
// Same, normalized.
ZetaProduct gk_cfunction(const RootSystem& rs, int node);

// prod_{i<r} zeta(s - i d/2) / zeta(s + i d/2 + 1)
ZetaProduct closed_form_c(int r, int d);

// prod_{i<r} zeta(s - 2i) / zeta(s + sign_i (2i+1)), sign_{r-1} = +1 and the
// signs alternate going down in i.
ZetaProduct quaternionic_closed_form(int r);

// Zeros of quaternionic_closed_form read off the alternating pattern
// -1-2(r-1), 1+2(r-2), -1-2(r-3), ...
std::vector<Rational> quaternionic_zero_pattern(int r);

// chi_s = (s,...,s) + (d/2)(1-r, 3-r, ..., r-1) as formal arguments.
std::vector<AffineArg> restricted_chi_s(int r, int d);

// Rank-one factorisation over the restricted roots of N: 2e_i gives
// zeta(t_i)/zeta(t_i+1); e_i+e_j gives zeta(t)/zeta(t+2) with
// t = (t_i+t_j)/2 (the SL2 over a quaternion algebra factor). Only short
// multiplicity 4 is supported.
ZetaProduct restricted_cfunction(const RestrictedRootDatum& rrd, std::span<const AffineArg> coords);

// Compares the restricted factorisation with the quaternionic closed form
// and the zero pattern under the p-adic profile; throws InconsistentData on
// any mismatch.
void check_quaternionic(int r);

// 1 + sum_{n=1}^{terms-1} (q^{2n} - q^{2n-2}) q^{-n(s+2)}; needs s > 0.
double sl2_quaternion_series(double q, double s, int terms);

}  // namespace fjt

#endif  // FJT_CFUNCTION_HPP_
