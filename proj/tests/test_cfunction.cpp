#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "fjt/cfunction.hpp"
#include "fjt/errors.hpp"
#include "tables.hpp"

using namespace fjt;

namespace {

ZetaProduct Z(const std::string& text) { return parse_zeta_product(text); }

// Independent Gindikin-Karpelevich oracle in the epsilon basis: lambda_s has
// an s-part and a constant part, and each coroot contributes
// zeta(<lambda, a^vee>) / zeta(<lambda, a^vee> + 1).
struct EpsChar {
  std::vector<Rational> slope;
  std::vector<Rational> offset;
};

ZetaProduct eps_gk(const EpsChar& lam, const std::vector<std::vector<int>>& coroots) {
  std::vector<AffineArg> num, den;
  for (const auto& c : coroots) {
    Rational k = 0, c0 = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      k += lam.slope[i] * c[i];
      c0 += lam.offset[i] * c[i];
    }
    REQUIRE(is_integer(k));
    num.push_back({static_cast<int>(k.numerator()), c0});
    den.push_back({static_cast<int>(k.numerator()), c0 + 1});
  }
  return normalize(ZetaProduct::raw(num, den));
}

std::vector<int> unit(int dim, int i, int si, int j = -1, int sj = 0) {
  std::vector<int> v(dim, 0);
  v[i] += si;
  if (j >= 0) v[j] += sj;
  return v;
}

// Siegel parabolic of C_n: omega_n = (1,..,1), rho_M = rho(A_{n-1}).
ZetaProduct oracle_c_siegel(int n) {
  EpsChar lam{std::vector<Rational>(n, 1), {}};
  for (int i = 0; i < n; ++i) lam.offset.push_back(-Rational(n - 1 - 2 * i, 2));
  std::vector<std::vector<int>> cor;
  for (int i = 0; i < n; ++i) {
    cor.push_back(unit(n, i, 1));
    for (int j = i + 1; j < n; ++j) cor.push_back(unit(n, i, 1, j, 1));
  }
  return eps_gk(lam, cor);
}

// Middle node of A_{2n-1}: coroots e_a - e_{n+b}; pairing s + a - b.
ZetaProduct oracle_a_middle(int n) {
  const int dim = 2 * n;
  EpsChar lam;
  for (int i = 0; i < dim; ++i) {
    lam.slope.push_back(i < n ? Rational(1, 2) : Rational(-1, 2));
    const int k = i < n ? i : i - n;
    lam.offset.push_back(-Rational(n - 1 - 2 * k, 2));
  }
  std::vector<std::vector<int>> cor;
  for (int a = 0; a < n; ++a)
    for (int b = n; b < dim; ++b) cor.push_back(unit(dim, a, 1, b, -1));
  return eps_gk(lam, cor);
}

// Node 1 of B_{n+1} (odd orthogonal) or D_{n+1} (even orthogonal).
ZetaProduct oracle_orthogonal_node1(bool odd, int n) {
  const int dim = n + 1;
  EpsChar lam{std::vector<Rational>(dim, 0), std::vector<Rational>(dim, 0)};
  lam.slope[0] = 1;
  for (int j = 1; j < dim; ++j)
    lam.offset[j] = odd ? -Rational(2 * (n - j) + 1, 2) : -Rational(n - j);
  std::vector<std::vector<int>> cor;
  for (int j = 1; j < dim; ++j) {
    cor.push_back(unit(dim, 0, 1, j, 1));
    cor.push_back(unit(dim, 0, 1, j, -1));
  }
  if (odd) cor.push_back(unit(dim, 0, 2));
  return eps_gk(lam, cor);
}

bool simply_laced(Family f) { return f == Family::A || f == Family::D || f == Family::E; }

}  // namespace

TEST_CASE("SL2") {
  const RootSystem a1({Family::A, 1});
  CHECK(gk_cfunction(a1, 0).to_string() == "Z(s)/Z(s+1)");
  CHECK(closed_form_c(1, 0) == gk_cfunction(a1, 0));
}

TEST_CASE("raw GK product keeps one factor pair per inversion") {
  const RootSystem a3({Family::A, 3});
  const ZetaProduct raw = gk_product_raw(a3, 1);
  CHECK(raw.numerator() == std::vector<AffineArg>{{1, -1}, {1, 0}, {1, 0}, {1, 1}});
  CHECK(raw.denominator() == std::vector<AffineArg>{{1, 0}, {1, 1}, {1, 1}, {1, 2}});
  CHECK(gk_cfunction(a3, 1) == Z("Z(s-1)*Z(s)/(Z(s+1)*Z(s+2))"));
}

TEST_CASE("GK product agrees with the epsilon-basis oracle") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(gk_cfunction(RootSystem({Family::C, n}), n - 1) == oracle_c_siegel(n));
  }
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(gk_cfunction(RootSystem({Family::A, 2 * n - 1}), n - 1) == oracle_a_middle(n));
  }
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(gk_cfunction(RootSystem({Family::B, n + 1}), 0) == oracle_orthogonal_node1(true, n));
  }
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(gk_cfunction(RootSystem({Family::D, n + 1}), 0) == oracle_orthogonal_node1(false, n));
  }
  CHECK(gk_cfunction(RootSystem({Family::C, 2}), 1).to_string() == "Z(s-1/2)*Z(2s)/(Z(s+3/2)*Z(2s+1))");
}

TEST_CASE("GK product equals the closed form on every simply-laced row") {
  for (const tables::Row& row : tables::classification_rows()) {
    if (!simply_laced(row.type.family)) continue;
    CAPTURE(row.type.name());
    CAPTURE(row.node);
    const RootSystem rs(row.type);
    const int d = row.r == 1 ? 0 : row.d;
    CHECK(gk_cfunction(rs, row.node - 1) == closed_form_c(row.r, d));
  }
}

TEST_CASE("closed form examples") {
  CHECK(closed_form_c(3, 8) == Z("Z(s)Z(s-4)Z(s-8)/(Z(s+1)Z(s+5)Z(s+9))"));
  CHECK(closed_form_c(2, 2) == Z("Z(s-1)Z(s)/(Z(s+1)Z(s+2))"));
  // d = 1: half-integral shifts
  CHECK(closed_form_c(2, 1).to_string() == "Z(s-1/2)*Z(s)/(Z(s+1)*Z(s+3/2))");
  CHECK(closed_form_c(1, 7) == Z("Z(s)/Z(s+1)"));
  CHECK_THROWS_AS(closed_form_c(0, 4), InvalidInput);
}

TEST_CASE("quaternionic closed form") {
  CHECK(quaternionic_closed_form(1).to_string() == "Z(s)/Z(s+1)");
  CHECK(quaternionic_closed_form(2).to_string() == "Z(s-2)*Z(s)/(Z(s-1)*Z(s+3))");
  CHECK(quaternionic_closed_form(3).to_string() == "Z(s-4)*Z(s-2)*Z(s)/(Z(s-3)*Z(s+1)*Z(s+5))");
  CHECK(quaternionic_zero_pattern(2) == std::vector<Rational>{-3, 1});
  CHECK(quaternionic_zero_pattern(3) == std::vector<Rational>{-5, 3, -1});
}

TEST_CASE("restricted factorisation reproduces the quaternionic closed form") {
  for (int r = 1; r <= 6; ++r) {
    CAPTURE(r);
    const auto chi = restricted_chi_s(r, 4);
    CHECK(restricted_cfunction(restricted_datum(r, 4), chi) == quaternionic_closed_form(r));
    CHECK_NOTHROW(check_quaternionic(r));
    const PoleLedger l = full_ledger(quaternionic_closed_form(r), ZetaProfile::padic(2), {-4 * r - 4, 4 * r + 4});
    std::vector<Rational> pattern = quaternionic_zero_pattern(r);
    std::sort(pattern.begin(), pattern.end());
    CHECK(l.zeros() == pattern);
  }
  CHECK(restricted_chi_s(3, 4) == std::vector<AffineArg>{{1, -4}, {1, 0}, {1, 4}});
}

TEST_CASE("restricted factorisation refuses other multiplicities") {
  for (int d : {1, 2, 8}) {
    const auto chi = restricted_chi_s(3, d);
    CHECK_THROWS_AS(restricted_cfunction(restricted_datum(3, d), chi), OutOfScope);
  }
  const auto short_chi = restricted_chi_s(2, 4);
  CHECK_THROWS_AS(restricted_cfunction(restricted_datum(3, 4), short_chi), InvalidInput);
}

TEST_CASE("quaternionic SL2 series matches its closed form") {
  for (double q : {2.0, 3.0, 5.0}) {
    const double s = 1.5;
    const ZetaProduct c = Z("Z(s)/Z(s+2)");
    const double partial = sl2_quaternion_series(q, s, 400);
    CHECK(std::abs(partial - eval_numeric(c, static_cast<int>(q), s)) < 1e-12);
  }
  CHECK(sl2_quaternion_series(2.0, 1.0, 1) == 1.0);
  CHECK_THROWS_AS(sl2_quaternion_series(2.0, 0.0, 10), OutOfScope);
  CHECK_THROWS_AS(sl2_quaternion_series(2.0, 1.0, 0), InvalidInput);
  CHECK_THROWS_AS(sl2_quaternion_series(1.0, 1.0, 10), InvalidInput);
}

TEST_CASE("degenerate character") {
  const RootSystem a3({Family::A, 3});
  const auto chi = degenerate_character(a3, 1);
  CHECK(chi.slope == a3.fundamental_weight(1));
  // -rho_M for A1xA1 pairs to -1 with the highest coroot
  CHECK(a3.pairing(chi.offset, a3.highest_root()) == Rational(-1));
  CHECK(a3.inversion_set(parabolic_w0(a3, 1)).size() == 4);
}
