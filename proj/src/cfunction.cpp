#include "fjt/cfunction.hpp"

#include <algorithm>
#include <cmath>

#include "fjt/errors.hpp"
#include "fjt/kernels.hpp"

namespace fjt {

DegenerateCharacter degenerate_character(const RootSystem& rs, int node) {
  std::vector<int> levi;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != node) levi.push_back(i);
  return {rs.fundamental_weight(node), -rs.rho(levi)};
}

WeylElement parabolic_w0(const RootSystem& rs, int node) {
  std::vector<int> levi;
  for (int i = 0; i < rs.rank(); ++i)
    if (i != node) levi.push_back(i);
  return rs.longest_element() * rs.longest_element(levi);
}

ZetaProduct gk_product_raw(const RootSystem& rs, int node) {
  const auto chi = degenerate_character(rs, node);
  const auto inversions = rs.inversion_set(parabolic_w0(rs, node));
  const auto args = kernels::affine_pairings(rs, chi.slope, chi.offset, inversions);
  std::vector<AffineArg> num, den;
  for (const AffineArg& a : args) {
    num.push_back(a);
    den.push_back(a.shifted(1));
  }
  return ZetaProduct::raw(std::move(num), std::move(den));
}

ZetaProduct gk_cfunction(const RootSystem& rs, int node) {
  return normalize(gk_product_raw(rs, node));
}

ZetaProduct closed_form_c(int r, int d) {
  if (r < 1 || d < 0) throw InvalidInput("closed form needs r >= 1, d >= 0");
  std::vector<AffineArg> num, den;
  for (int i = 0; i < r; ++i) {
    const Rational shift(i * d, 2);
    num.push_back({1, -shift});
    den.push_back({1, shift + 1});
  }
  return normalize(ZetaProduct::raw(std::move(num), std::move(den)));
}

ZetaProduct quaternionic_closed_form(int r) {
  if (r < 1) throw InvalidInput("quaternionic closed form needs r >= 1");
  std::vector<AffineArg> num, den;
  for (int i = 0; i < r; ++i) {
    const int sign = (r - 1 - i) % 2 == 0 ? 1 : -1;
    num.push_back({1, Rational(-2 * i)});
    den.push_back({1, Rational(sign * (2 * i + 1))});
  }
  return normalize(ZetaProduct::raw(std::move(num), std::move(den)));
}

std::vector<Rational> quaternionic_zero_pattern(int r) {
  std::vector<Rational> out;
  for (int m = 0; m < r; ++m) {
    const int magnitude = 1 + 2 * (r - 1 - m);
    out.push_back(m % 2 == 0 ? -magnitude : magnitude);
  }
  return out;
}

std::vector<AffineArg> restricted_chi_s(int r, int d) {
  std::vector<AffineArg> out;
  for (int i = 1; i <= r; ++i) out.push_back({1, Rational(d * (2 * i - 1 - r), 2)});
  return out;
}

ZetaProduct restricted_cfunction(const RestrictedRootDatum& rrd,
                                 std::span<const AffineArg> coords) {
  if (rrd.r > 1 && rrd.short_mult != 4)
    throw OutOfScope("rank-one factor known only for short multiplicity 4 (quaternion case), got " +
                     std::to_string(rrd.short_mult));
  if (coords.size() != static_cast<std::size_t>(rrd.r))
    throw InvalidInput("restricted character needs " + std::to_string(rrd.r) + " coordinates");

  ZetaProduct acc;
  for (const RestrictedRoot& a : rrd.positive_roots) {
    if (!a.in_nilradical) continue;
    int k_sum = 0;
    Rational c_sum = 0;
    int support = 0;
    for (int i = 0; i < rrd.r; ++i) {
      if (a.coords[i] == 0) continue;
      k_sum += coords[i].k;
      c_sum += coords[i].c;
      ++support;
    }
    if (a.long_root) {
      const AffineArg t{k_sum, c_sum};
      acc = multiply_raw(acc, ZetaProduct::quotient(t, t.shifted(1)));
    } else {
      if (support != 2 || k_sum % 2 != 0)
        throw InvalidInput("short restricted root needs matching s-coefficients");
      const AffineArg t{k_sum / 2, c_sum / 2};
      acc = multiply_raw(acc, ZetaProduct::quotient(t, t.shifted(2)));
    }
  }
  return normalize(acc);
}

void check_quaternionic(int r) {
  const auto profile = ZetaProfile::padic(2);
  const Window window{-(4 * r + 4), 4 * r + 4};
  const auto closed = full_ledger(quaternionic_closed_form(r), profile, window);
  const auto chi = restricted_chi_s(r, 4);
  const auto factored = full_ledger(restricted_cfunction(restricted_datum(r, 4), chi), profile, window);
  if (!(closed == factored))
    throw InconsistentData("quaternionic closed form disagrees with the restricted factorisation at r=" +
                           std::to_string(r));
  auto zeros = closed.zeros();
  auto pattern = quaternionic_zero_pattern(r);
  std::sort(pattern.begin(), pattern.end());
  if (zeros != pattern)
    throw InconsistentData("quaternionic zeros do not follow the alternating pattern at r=" +
                           std::to_string(r));
}

double sl2_quaternion_series(double q, double s, int terms) {
  if (!(s > 0)) throw OutOfScope("series diverges for s <= 0");
  if (terms < 1) throw InvalidInput("series needs at least one term");
  if (!(q > 1)) throw InvalidInput("series needs q > 1");
  // (q^{2n} - q^{2n-2}) q^{-n(s+2)} = (1 - q^{-2}) q^{-ns}
  const double ratio = std::pow(q, -s);
  const double lead = 1.0 - 1.0 / (q * q);
  double sum = 1.0;
  double power = 1.0;
  for (int n = 1; n < terms; ++n) {
    power *= ratio;
    sum += lead * power;
  }
  return sum;
}

}  // namespace fjt
