#include <doctest.h>

#include "fjt/errors.hpp"
#include "fjt/reducibility.hpp"

using namespace fjt;

namespace {

const CharacterClass kTrivial{CharTag::trivial, ChiDTag::trivial};
const CharacterClass kQuad{CharTag::quadratic_nontrivial, ChiDTag::trivial};

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("character classes") {
  CHECK(parse_char("chi_K") == CharTag::chi_K);
  CHECK(parse_chi_d("K") == ChiDTag::quadratic_field);
  CHECK_THROWS_AS(parse_char("sign"), InvalidInput);
  const CharacterClass chi_d_k{CharTag::chi_D, ChiDTag::quadratic_field};
  CHECK(chi_d_k.canonical().tag == CharTag::chi_K);
  CHECK((CharacterClass{CharTag::chi_D, ChiDTag::trivial}).is_trivial());
  CHECK_THROWS_AS((CharacterClass{CharTag::chi_K, ChiDTag::trivial}).canonical(), InvalidInput);
  CHECK_THROWS_AS((CharacterClass{CharTag::chi_D, ChiDTag::undefined}).canonical(), InvalidInput);
  // twisting by chi_D is an involution
  for (CharTag t : {CharTag::trivial, CharTag::quadratic_nontrivial, CharTag::chi_K}) {
    const CharacterClass c{t, ChiDTag::quadratic_field};
    CHECK(twist_by_discriminant(twist_by_discriminant(c)) == c);
  }
  CHECK(twist_by_discriminant({CharTag::trivial, ChiDTag::quadratic_field}).tag == CharTag::chi_K);
  CHECK(twist_by_discriminant(kQuad) == kQuad);
}

TEST_CASE("SL2") {
  const auto triv = sl2_reducibility(kTrivial, false);
  CHECK(triv.locations() == R({-1, 1}));
  CHECK(triv.points[1].trivial_subquotient);
  const auto quad = sl2_reducibility(kQuad, false);
  REQUIRE(quad.points.size() == 1);
  CHECK(quad.points[0].s == 0);
  CHECK(quad.points[0].structure == Structure::direct_sum_2);
  const auto mp = sl2_reducibility(kTrivial, true);
  CHECK(mp.locations() == R({Rational(-1, 2), Rational(1, 2)}));
  CHECK(reducibility_points(1, 0, ChiDTag::trivial, kTrivial).locations() == R({-1, 1}));
}

TEST_CASE("r = 2, chi_D trivial") {
  // d = 4: n = 3
  const auto t = reducibility_points(2, 4, ChiDTag::trivial, kTrivial);
  CHECK(t.locations() == R({-3, -1, 1, 3}));
  CHECK_FALSE(t.extrapolated);
  for (const auto& p : t.points) {
    CHECK(p.structure == Structure::nonsplit_length_2);
    CHECK(p.trivial_subquotient == (abs(p.s) == 3));
  }
  const auto q = reducibility_points(2, 4, ChiDTag::trivial, kQuad);
  CHECK(q.locations() == R({0}));
  CHECK(q.points[0].structure == Structure::direct_sum_2);
  CHECK(reducibility_points(2, 2, ChiDTag::trivial, kTrivial).extrapolated);
}

TEST_CASE("r = 2, chi_D = chi_K") {
  const ChiDTag k = ChiDTag::quadratic_field;
  const auto ck = reducibility_points(2, 6, k, {CharTag::chi_K, k});
  CHECK(ck.locations() == R({-1, 1}));
  CHECK(ck.points[0].structure == Structure::nonsplit_length_2);
  const auto t = reducibility_points(2, 6, k, {CharTag::trivial, k});
  CHECK(t.locations() == R({-4, 0, 4}));
  CHECK(t.points[0].structure == Structure::contains_trivial);
  CHECK(t.points[1].structure == Structure::direct_sum_2);
  const auto q = reducibility_points(2, 6, k, {CharTag::quadratic_nontrivial, k});
  CHECK(q.locations() == R({0}));
}

TEST_CASE("r = 2, odd d") {
  const ChiDTag u = ChiDTag::undefined;
  const auto t = reducibility_points(2, 3, u, {CharTag::trivial, u});
  CHECK(t.locations() == R({Rational(-5, 2), Rational(-1, 2), Rational(1, 2), Rational(5, 2)}));
  CHECK(t.points.back().trivial_subquotient);
  const auto q = reducibility_points(2, 3, u, {CharTag::quadratic_nontrivial, u});
  CHECK(q.locations() == R({Rational(-1, 2), Rational(1, 2)}));
  CHECK(reducibility_points(2, 1, u, {CharTag::trivial, u}).extrapolated);
}

TEST_CASE("r >= 3") {
  const auto t = reducibility_points(3, 8, ChiDTag::trivial, kTrivial);
  CHECK(t.locations() == R({-9, -5, -1, 1, 5, 9}));
  CHECK(t.points.back().trivial_subquotient);
  CHECK_FALSE(t.points[4].trivial_subquotient);
  CHECK(reducibility_points(4, 2, ChiDTag::trivial, kQuad).locations() == R({0}));
  CHECK_THROWS_AS(reducibility_points(3, 1, ChiDTag::undefined, {CharTag::trivial, ChiDTag::undefined}), OutOfScope);
  CHECK_THROWS_AS(reducibility_points(3, 4, ChiDTag::quadratic_field, {CharTag::trivial, ChiDTag::quadratic_field}),
                  OutOfScope);
  CHECK(trivial_rep_points(3, 8) == R({-9, 9}));
}

TEST_CASE("discriminant tag validation") {
  CHECK_THROWS_AS(reducibility_points(2, 3, ChiDTag::trivial, kTrivial), InvalidInput);
  CHECK_THROWS_AS(reducibility_points(2, 4, ChiDTag::undefined, {CharTag::trivial, ChiDTag::undefined}), InvalidInput);
  CHECK_THROWS_AS(reducibility_points(2, 4, ChiDTag::quadratic_field, kTrivial), InvalidInput);
}

TEST_CASE("Fourier-Jacobi image") {
  CHECK_FALSE(fj_image(1, 4, kTrivial, 1).has_value());
  const auto img = fj_image(3, 4, kTrivial, Rational(5));
  REQUIRE(img.has_value());
  CHECK(img->r == 2);
  CHECK(img->s == 5);
  CHECK_FALSE(img->metaplectic);
  CHECK(fj_image(2, 3, {CharTag::trivial, ChiDTag::undefined}, 0)->metaplectic);
  CHECK(fj_image(2, 6, {CharTag::trivial, ChiDTag::quadratic_field}, 0)->chi.tag == CharTag::chi_K);
}

TEST_CASE("tower candidates") {
  CHECK(fj_candidates(3, 8, ChiDTag::trivial, kTrivial) == R({-9, -5, -1, 1, 5, 9}));
  CHECK(fj_candidates(3, 8, ChiDTag::trivial, kQuad) == R({0}));
  CHECK(fj_candidates(2, 3, ChiDTag::undefined, {CharTag::trivial, ChiDTag::undefined}) ==
        R({Rational(-5, 2), Rational(-1, 2), Rational(1, 2), Rational(5, 2)}));
  // chi_K twists to trivial at the SL2 level
  CHECK(fj_candidates(2, 6, ChiDTag::quadratic_field, {CharTag::chi_K, ChiDTag::quadratic_field}) == R({-1, 1}));
}

TEST_CASE("rules and tower recursion agree on the whole scope") {
  for (int r = 1; r <= 6; ++r)
    for (int d = 1; d <= 12; ++d) {
      std::vector<ChiDTag> tags;
      if (d % 2 != 0) {
        if (r <= 2) tags.push_back(ChiDTag::undefined);
      } else {
        tags.push_back(ChiDTag::trivial);
        if (r <= 2) tags.push_back(ChiDTag::quadratic_field);
      }
      for (ChiDTag tag : tags) {
        CAPTURE(r);
        CAPTURE(d);
        const FjConsistency c = verify_fj_consistency(r, d, tag);
        CHECK(c.ok);
        CHECK(c.witnesses.empty());
        if (r >= 2) CHECK(c.traces.size() == (tag == ChiDTag::quadratic_field ? 3u : 2u));
      }
    }
  CHECK_THROWS_AS(verify_fj_consistency(3, 3, ChiDTag::undefined), OutOfScope);
}

TEST_CASE("Jantzen pyramid") {
  const PyramidReport p = jantzen_pyramid(3, 2);
  CHECK(p.cells.size() == 2 + 3 + 4);
  CHECK(p.floors.size() == 3);
  CHECK(p.socle_floor == 3);
  CHECK(p.cosocle_floor == 1);
  CHECK(p.floors.front().size() == 2);
  CHECK(jantzen_pyramid(1, 1).cells.size() == 3);
  CHECK_THROWS_AS(jantzen_pyramid(3, 0), InvalidInput);
  CHECK_THROWS_AS(jantzen_pyramid(3, 4), InvalidInput);
}

TEST_CASE("co-socle K-types") {
  const KTypeCheck k = cosocle_ktype_check(3, 4, 2, 0, {5, 0, 0});
  CHECK(k.in_cone);
  CHECK(k.highest_weight == std::vector<int>{7, 2, 2});
  CHECK_FALSE(cosocle_ktype_check(3, 4, 1, 0, {5, 1, 0}).in_cone);
  CHECK(cosocle_ktype_check(4, 8, 1, 1, {3, 0, 0, -2}).highest_weight == std::vector<int>{3, 0, 0, -2});
  CHECK_THROWS_AS(cosocle_ktype_check(3, 2, 1, 0, {0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(cosocle_ktype_check(3, 4, 2, 1, {0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(cosocle_ktype_check(3, 4, 1, 0, {0, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(cosocle_ktype_check(3, 4, 1, 0, {0, 0}), InvalidInput);
}
