// Seeded randomized checks of the algebraic invariants.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fjt/cfunction.hpp"
#include "fjt/eisenstein.hpp"
#include "fjt/errors.hpp"
#include "fjt/reducibility.hpp"
#include "fjt/zeta.hpp"

using namespace fjt;

namespace {

ZetaProduct random_product(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(0, 5), shift(-8, 8), coeff(1, 2);
  std::vector<AffineArg> num, den;
  for (int k = count(rng); k > 0; --k) num.push_back({coeff(rng), Rational(shift(rng), 2)});
  for (int k = count(rng); k > 0; --k) den.push_back({coeff(rng), Rational(shift(rng), 2)});
  return ZetaProduct::raw(num, den);
}

const Window kWindow{-10, 10};

}  // namespace

TEST_CASE("normalize is idempotent and preserves the ledger") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const ZetaProduct x = random_product(rng);
    const ZetaProduct n = normalize(x);
    CHECK(normalize(n) == n);
    CHECK(full_ledger(n, ZetaProfile::padic(3), kWindow) == full_ledger(x, ZetaProfile::padic(3), kWindow));
    CHECK(full_ledger(n, ZetaProfile::real(), kWindow) == full_ledger(x, ZetaProfile::real(), kWindow));
  }
}

TEST_CASE("inverse cancels") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const ZetaProduct x = random_product(rng);
    CHECK(multiply(x, inverse(x)).is_one());
    CHECK(inverse(inverse(x)) == x);
  }
}

TEST_CASE("ledgers add under multiplication") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const ZetaProduct a = random_product(rng), b = random_product(rng);
    for (const auto& prof : {ZetaProfile::padic(2), ZetaProfile::real()}) {
      const PoleLedger sum = full_ledger(a, prof, kWindow) + full_ledger(b, prof, kWindow);
      CHECK(full_ledger(multiply_raw(a, b), prof, kWindow) == sum);
      CHECK(full_ledger(multiply(a, b), prof, kWindow) == sum);
    }
  }
}

TEST_CASE("normalized and raw products evaluate alike") {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> sdist(0.05, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const ZetaProduct x = random_product(rng);
    const double s = sdist(rng) + 0.013;  // off the half-integer grid
    const double raw = eval_numeric(x, 5, s), norm = eval_numeric(normalize(x), 5, s);
    CHECK(std::abs(raw - norm) <= 1e-9 * std::max(1.0, std::abs(raw)));
  }
}

TEST_CASE("reducibility reports are symmetric under s -> -s") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> rdist(1, 7), ddist(1, 12), cdist(0, 2);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int r = rdist(rng), d = ddist(rng);
    ChiDTag tag = d % 2 ? ChiDTag::undefined : (cdist(rng) == 0 && r <= 2 ? ChiDTag::quadratic_field : ChiDTag::trivial);
    if (r == 1) tag = ChiDTag::trivial;
    CharTag ct = cdist(rng) == 0 ? CharTag::trivial : CharTag::quadratic_nontrivial;
    if (tag == ChiDTag::quadratic_field && cdist(rng) == 1) ct = CharTag::chi_K;
    try {
      const ReducibilityReport rep = reducibility_points(r, d, tag, {ct, tag});
      CHECK(rep.symmetric());
      const auto locs = rep.locations();
      CHECK(std::is_sorted(locs.begin(), locs.end()));
      ++checked;
    } catch (const OutOfScope&) {
      CHECK(r >= 3);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("pyramid cell count") {
  for (int r = 1; r <= 8; ++r)
    for (int i = 1; i <= r; ++i) {
      int expect = 0;
      for (int t = r - i; t <= r; ++t) expect += t + 1;
      const PyramidReport p = jantzen_pyramid(r, i);
      CHECK(static_cast<int>(p.cells.size()) == expect);
      for (const PyramidCell& c : p.cells) {
        CHECK(c.p + c.q >= r - i);
        CHECK(c.p + c.q <= r);
      }
    }
}

TEST_CASE("global poles avoid the walls and are simple") {
  for (int r = 2; r <= 7; ++r)
    for (int d : {4, 8, 12, 16}) {
      const GlobalPoleReport rep = global_pole_ledger(r, d, ChiDTag::trivial, true);
      for (const GlobalPole& p : rep.points) {
        CHECK(wall_check(chi_s_coords(r, d, p.s0)).regular());
        CHECK(p.order == 1);
      }
      for (const RejectedCandidate& c : rep.rejected) CHECK_FALSE(c.walls.regular());
    }
}
