#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fpwords/position.hpp"
#include "oracles.hpp"

using namespace fpwords;

namespace {

FreeProduct z2z3() {
  return FreeProduct(GroupTable::cyclic(2, "a"), GroupTable::cyclic(3, "t"));
}

FreeProduct z3z3() {
  return FreeProduct(GroupTable::cyclic(3, "s"), GroupTable::cyclic(3, "t"));
}

CyclicWord cw(std::vector<Letter> ls) { return CyclicWord(std::move(ls)); }

std::vector<Letter> seg(std::initializer_list<Letter> ls) { return ls; }

}  // namespace

TEST_CASE("occurrence counting") {
  FreeProduct fp3 = z3z3();
  CyclicWord r = cw({{1, 1}, {2, 1}, {1, 2}, {2, 2}});  // s t s^2 t^2

  SECTION("s t occurs once and never in the inverse") {
    OccurrenceCounts c = count_occurrences(fp3, r, seg({{1, 1}, {2, 1}}));
    CHECK(c.in_word == 1);
    CHECK(c.in_inverse == 0);
    CHECK(is_uniquely_positioned(fp3, r, seg({{1, 1}, {2, 1}})));
  }
  SECTION("single letters") {
    OccurrenceCounts c = count_occurrences(fp3, r, seg({{1, 1}}));
    CHECK(c.in_word == 1);
    CHECK(c.in_inverse == 1);  // s^-1 = s^2 sits in r, so s sits in r^-1
  }

  FreeProduct fp = z2z3();
  CyclicWord atat2 = cw({{1, 1}, {2, 1}, {1, 1}, {2, 2}});

  SECTION("a appears twice on each side of a t a t^2") {
    OccurrenceCounts c = count_occurrences(fp, atat2, seg({{1, 1}}));
    CHECK(c.in_word == 2);
    CHECK(c.in_inverse == 2);
  }
  SECTION("t a t^2 also lands in the inverse") {
    // the inverse of a t a t^2 is t a t^2 a, a rotation of the word itself,
    // so every subword shows up on both sides
    OccurrenceCounts c =
        count_occurrences(fp, atat2, seg({{2, 1}, {1, 1}, {2, 2}}));
    CHECK(c.in_word == 1);
    CHECK(c.in_inverse == 1);
    CHECK_FALSE(is_uniquely_positioned(fp, atat2, seg({{2, 1}, {1, 1}, {2, 2}})));
  }
  SECTION("length two word a t") {
    CyclicWord at = cw({{1, 1}, {2, 1}});
    OccurrenceCounts ct = count_occurrences(fp, at, seg({{2, 1}}));
    CHECK(ct.in_word == 1);
    CHECK(ct.in_inverse == 0);
    CHECK(is_uniquely_positioned(fp, at, seg({{2, 1}})));
    OccurrenceCounts ca = count_occurrences(fp, at, seg({{1, 1}}));
    CHECK(ca.in_word == 1);
    CHECK(ca.in_inverse == 1);
  }
  SECTION("bad subwords rejected") {
    CHECK_THROWS_AS(count_occurrences(fp, atat2, {}), InputError);
    CHECK_THROWS_AS(
        count_occurrences(fp, atat2, atat2.letters()), InputError);
    CHECK_THROWS_AS(
        count_occurrences(fp, atat2, seg({{1, 1}, {1, 1}})), InputError);
    CHECK_THROWS_AS(count_occurrences(fp, atat2, seg({{2, 5}})), InputError);
  }
}

TEST_CASE("occurrence counts match the doubled-word oracle") {
  std::mt19937 rng(905);
  for (int iter = 0; iter < 1500; ++iter) {
    const FreeProduct& rfp =
        oracles::product_pool()[iter % oracles::product_pool().size()];
    CyclicWord w = oracles::random_word(rng, rfp, 6);
    std::uniform_int_distribution<int> sdist(0, w.length() - 1);
    std::uniform_int_distribution<int> ldist(1, w.length() - 1);
    int start = sdist(rng);
    int len = ldist(rng);
    std::vector<Letter> p = cyclic_subword(w, start, len);
    OccurrenceCounts fast = count_occurrences(rfp, w, p);
    OccurrenceCounts slow = oracles::count_occurrences_doubled(rfp, w, p);
    CHECK(fast == slow);
    CHECK(fast.in_word >= 1);  // p was cut out of w
  }
}

TEST_CASE("unique position decomposition") {
  FreeProduct fp3 = z3z3();
  SECTION("s t s^2 t^2 splits at s t") {
    CyclicWord r = cw({{1, 1}, {2, 1}, {1, 2}, {2, 2}});
    std::optional<UpDecomposition> d = find_up_decomposition(fp3, r);
    REQUIRE(d.has_value());
    CHECK(d->rotation == 0);
    CHECK(d->split == 2);
    CHECK(d->u.letters == seg({{1, 1}, {2, 1}}));
    CHECK(d->v.letters == seg({{1, 2}, {2, 2}}));
  }

  FreeProduct fp = z2z3();
  SECTION("a t a t^2 has no unique position subword") {
    CyclicWord r = cw({{1, 1}, {2, 1}, {1, 1}, {2, 2}});
    CHECK_FALSE(find_up_decomposition(fp, r).has_value());
  }
  SECTION("a t has no proper decomposition either way") {
    // both halves would be single letters; a is an involution
    CyclicWord r = cw({{1, 1}, {2, 1}});
    CHECK_FALSE(find_up_decomposition(fp, r).has_value());
  }
  SECTION("proper powers are rejected") {
    CyclicWord sq = cw({{1, 1}, {2, 1}, {1, 1}, {2, 1}});
    CHECK_THROWS_AS(find_up_decomposition(fp, sq), InputError);
  }
  SECTION("involution chain a b1 a b2 a b3") {
    FreeProduct fpb(GroupTable::cyclic(2, "a"),
                    GroupTable::elementary_abelian_2(3, "b"));
    CyclicWord s = cw({{1, 1}, {2, 1}, {1, 1}, {2, 2}, {1, 1}, {2, 4}});
    CHECK_FALSE(find_up_decomposition(fpb, s).has_value());
  }
}

TEST_CASE("unique position invariances") {
  std::mt19937 rng(906);
  int found = 0;
  for (int iter = 0; iter < 1200; ++iter) {
    const FreeProduct& rfp =
        oracles::product_pool()[iter % oracles::product_pool().size()];
    CyclicWord w = oracles::random_word(rng, rfp, 5);
    if (is_proper_power(w).proper) continue;
    std::optional<UpDecomposition> d = find_up_decomposition(rfp, w);
    std::uniform_int_distribution<int> kdist(0, w.length() - 1);
    int k = kdist(rng);
    // existence is a property of the cyclic word, not of the spelling
    CHECK(find_up_decomposition(rfp, rotate(w, k)).has_value() ==
          d.has_value());
    CHECK(find_up_decomposition(rfp, invert(rfp, w)).has_value() ==
          d.has_value());
    if (d.has_value()) {
      ++found;
      // the witness subword really is uniquely positioned, and its inverse
      // is uniquely positioned in the inverse word
      CHECK(is_uniquely_positioned(rfp, w, d->u.letters));
      FPWord ui = invert(rfp, d->u);
      CHECK(is_uniquely_positioned(rfp, invert(rfp, w), ui.letters));
    }
  }
  CHECK(found > 50);
}
