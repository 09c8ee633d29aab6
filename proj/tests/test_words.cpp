#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fpwords/words.hpp"
#include "oracles.hpp"

using namespace fpwords;

namespace {

FreeProduct z2z3() {
  return FreeProduct(GroupTable::cyclic(2, "a"), GroupTable::cyclic(3, "t"));
}

FreeProduct z3z3() {
  return FreeProduct(GroupTable::cyclic(3, "s"), GroupTable::cyclic(3, "t"));
}

FreeProduct z6z3() {
  return FreeProduct(GroupTable::cyclic(6, "g"), GroupTable::cyclic(3, "t"));
}

CyclicWord cw(std::vector<Letter> ls) { return CyclicWord(std::move(ls)); }

}  // namespace

TEST_CASE("cyclic word validation") {
  CHECK_THROWS_AS(cw({}), InputError);
  CHECK_THROWS_AS(cw({{1, 1}}), InputError);
  CHECK_THROWS_AS(cw({{1, 1}, {2, 1}, {2, 2}, {1, 1}}), InputError);
  CHECK_THROWS_AS(cw({{1, 1}, {1, 2}}), InputError);   // no cyclic alternation
  CHECK_THROWS_AS(cw({{1, 0}, {2, 1}}), InputError);   // identity letter
  CHECK_THROWS_AS(cw({{3, 1}, {2, 1}}), InputError);   // bad factor
  CHECK_NOTHROW(cw({{1, 1}, {2, 1}}));
  CHECK_NOTHROW(cw({{2, 1}, {1, 1}}));  // starting factor 2 is fine
}

TEST_CASE("free reduction") {
  FreeProduct fp = z2z3();
  SECTION("inverse pair vanishes") {
    FPWord w = reduce(fp, {{2, 1}, {2, 2}});
    CHECK(w.empty());
  }
  SECTION("nested collapse") {
    FPWord w = reduce(fp, {{1, 1}, {2, 1}, {2, 2}, {1, 1}});
    CHECK(w.empty());
  }
  SECTION("in-factor merge") {
    FreeProduct fp6 = z6z3();
    FPWord w = reduce(fp6, {{1, 1}, {1, 2}, {2, 1}});
    REQUIRE(w.length() == 2);
    CHECK(w.letters[0] == Letter{1, 3});
    CHECK(w.letters[1] == Letter{2, 1});
  }
  SECTION("identities are dropped") {
    FPWord w = reduce(fp, {{1, 0}, {2, 1}, {2, 0}});
    REQUIRE(w.length() == 1);
    CHECK(w.letters[0] == Letter{2, 1});
  }
  SECTION("idempotent") {
    std::vector<RawLetter> raws = {{1, 1}, {2, 1}, {2, 1}, {1, 1}, {2, 2}};
    FPWord once = reduce(fp, raws);
    std::vector<RawLetter> again;
    for (const Letter& l : once.letters) again.push_back({l.factor, l.elem});
    CHECK(reduce(fp, again) == once);
  }
  SECTION("bad input rejected") {
    CHECK_THROWS_AS(reduce(fp, {{1, 5}}), InputError);
    CHECK_THROWS_AS(reduce(fp, {{0, 1}}), InputError);
  }
}

TEST_CASE("cyclic reduction") {
  FreeProduct fp = z2z3();
  SECTION("t a t^2 conjugates down to a") {
    CyclicReduction cr = cyclically_reduce(fp, reduce(fp, {{2, 1}, {1, 1}, {2, 2}}));
    REQUIRE(cr.core.length() == 1);
    CHECK(cr.core.letters[0] == Letter{1, 1});
    REQUIRE(cr.conjugator.length() == 1);
    CHECK(cr.conjugator.letters[0] == Letter{2, 1});
  }
  SECTION("already cyclic stays put") {
    FPWord w = reduce(fp, {{1, 1}, {2, 1}});
    CyclicReduction cr = cyclically_reduce(fp, w);
    CHECK(cr.core == w);
    CHECK(cr.conjugator.empty());
  }
  SECTION("s t s^2 over Z3*Z3") {
    FreeProduct fp3 = z3z3();
    CyclicReduction cr =
        cyclically_reduce(fp3, reduce(fp3, {{1, 1}, {2, 1}, {1, 2}}));
    REQUIRE(cr.core.length() == 1);
    CHECK(cr.core.letters[0] == Letter{2, 1});
    REQUIRE(cr.conjugator.length() == 1);
    CHECK(cr.conjugator.letters[0] == Letter{1, 1});
  }
  SECTION("ends merge into one syllable") {
    // t^2 a t over Z2*Z3: ends multiply to a nontrivial t^2·t... the other
    // way: last=t, first=t^2, t·t^2 = 1, so it strips instead.
    FreeProduct fp6 = z6z3();
    // g t g over Z6*Z3: ends g·g = g^2 nontrivial
    CyclicReduction cr =
        cyclically_reduce(fp6, reduce(fp6, {{1, 1}, {2, 1}, {1, 1}}));
    REQUIRE(cr.core.length() == 2);
    CHECK(cr.core.letters[0] == Letter{2, 1});
    CHECK(cr.core.letters[1] == Letter{1, 2});
    REQUIRE(cr.conjugator.length() == 1);
    CHECK(cr.conjugator.letters[0] == Letter{1, 1});
  }
  SECTION("conjugation identity: conj * core * conj^-1 reduces to the input") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 500; ++iter) {
      const FreeProduct& rfp =
          oracles::product_pool()[iter % oracles::product_pool().size()];
      std::uniform_int_distribution<int> len_dist(1, 8);
      int len = len_dist(rng);
      std::vector<RawLetter> raws;
      for (int i = 0; i < len; ++i) {
        std::uniform_int_distribution<int> fdist(1, 2);
        int f = fdist(rng);
        std::uniform_int_distribution<int> edist(1, rfp.factor(f).size() - 1);
        raws.push_back({f, edist(rng)});
      }
      FPWord w = reduce(rfp, raws);
      CyclicReduction cr = cyclically_reduce(rfp, w);
      std::vector<RawLetter> rebuilt;
      for (const Letter& l : cr.conjugator.letters)
        rebuilt.push_back({l.factor, l.elem});
      for (const Letter& l : cr.core.letters)
        rebuilt.push_back({l.factor, l.elem});
      FPWord ci = invert(rfp, cr.conjugator);
      for (const Letter& l : ci.letters) rebuilt.push_back({l.factor, l.elem});
      CHECK(reduce(rfp, rebuilt) == w);
      if (cr.core.length() >= 2) CHECK_NOTHROW(to_cyclic(cr.core));
    }
  }
}

TEST_CASE("inversion") {
  FreeProduct fp = z2z3();
  CyclicWord at = cw({{1, 1}, {2, 1}});
  CyclicWord t2a = invert(fp, at);
  CHECK(t2a == cw({{2, 2}, {1, 1}}));

  FreeProduct fp3 = z3z3();
  CyclicWord r = cw({{1, 1}, {2, 1}, {1, 2}, {2, 2}});
  CHECK(invert(fp3, r) == cw({{2, 1}, {1, 1}, {2, 2}, {1, 2}}));
  CHECK(invert(fp3, invert(fp3, r)) == r);
}

TEST_CASE("rotation") {
  CyclicWord r = cw({{1, 1}, {2, 1}, {1, 1}, {2, 2}});
  CHECK(rotate(r, 0) == r);
  CHECK(rotate(r, 2) == cw({{1, 1}, {2, 2}, {1, 1}, {2, 1}}));
  CHECK(rotate(r, 4) == r);
  CHECK(rotate(r, -2) == rotate(r, 2));
  CHECK(rotate(rotate(r, 1), 3) == r);
  CHECK(rotate(r, 1).length() == r.length());
}

TEST_CASE("proper power detection") {
  SECTION("square") {
    PowerCheck pc = is_proper_power(cw({{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
    CHECK(pc.proper);
    CHECK(pc.root == cw({{1, 1}, {2, 1}}));
    CHECK(pc.exponent == 2);
  }
  SECTION("primitive words") {
    CHECK_FALSE(is_proper_power(cw({{1, 1}, {2, 1}, {1, 1}, {2, 2}})).proper);
    CHECK_FALSE(
        is_proper_power(cw({{1, 1}, {2, 1}, {1, 2}, {2, 2}})).proper);
  }
  SECTION("exponent law") {
    std::mt19937 rng(901);
    for (int iter = 0; iter < 200; ++iter) {
      const FreeProduct& rfp =
          oracles::product_pool()[iter % oracles::product_pool().size()];
      CyclicWord q = oracles::random_word(rng, rfp, 3);
      std::uniform_int_distribution<int> kdist(2, 4);
      int k = kdist(rng);
      std::vector<Letter> ls;
      for (int i = 0; i < k; ++i)
        ls.insert(ls.end(), q.letters().begin(), q.letters().end());
      PowerCheck pc = is_proper_power(CyclicWord(std::move(ls)));
      CHECK(pc.proper);
      CHECK(pc.exponent % k == 0);
    }
  }
  SECTION("matches the all-rotations oracle") {
    std::mt19937 rng(902);
    for (int iter = 0; iter < 2000; ++iter) {
      const FreeProduct& rfp =
          oracles::product_pool()[iter % oracles::product_pool().size()];
      CyclicWord w = oracles::random_word(rng, rfp, 6);
      PowerCheck a = is_proper_power(w);
      PowerCheck b = oracles::proper_power_all_rotations(w);
      CHECK(a.proper == b.proper);
      CHECK(a.root == b.root);
      CHECK(a.exponent == b.exponent);
    }
  }
  SECTION("primitive words have distinct rotations") {
    std::mt19937 rng(903);
    for (int iter = 0; iter < 200; ++iter) {
      const FreeProduct& rfp =
          oracles::product_pool()[iter % oracles::product_pool().size()];
      CyclicWord w = oracles::random_word(rng, rfp, 5);
      if (is_proper_power(w).proper) continue;
      for (int i = 0; i < w.length(); ++i)
        for (int j = i + 1; j < w.length(); ++j)
          CHECK(rotate(w, i) != rotate(w, j));
    }
  }
}

TEST_CASE("symmetrized orbits and canonical representatives") {
  FreeProduct fp = z2z3();
  SECTION("orbit of a t") {
    CyclicWord at = cw({{1, 1}, {2, 1}});
    std::vector<CyclicWord> orbit = sym_orbit(fp, at);
    CHECK(orbit.size() == 4);
    SymClassRep rep = sym_closure_rep(fp, at);
    CHECK(rep.orbit_size == 4);
    CHECK(rep.rep == at);  // lexicographically least
  }
  SECTION("a t a t^2 meets its own inverse") {
    CyclicWord r = cw({{1, 1}, {2, 1}, {1, 1}, {2, 2}});
    SymClassRep rep = sym_closure_rep(fp, r);
    CHECK(rep.orbit_size == 4);  // < 2 * length: inverse is a rotation
    CHECK(rep.rep == r);
  }
  SECTION("constant on the orbit") {
    std::mt19937 rng(904);
    for (int iter = 0; iter < 300; ++iter) {
      const FreeProduct& rfp =
          oracles::product_pool()[iter % oracles::product_pool().size()];
      CyclicWord w = oracles::random_word(rng, rfp, 5);
      SymClassRep rep = sym_closure_rep(rfp, w);
      for (int k = 0; k < w.length(); ++k) {
        CHECK(sym_closure_rep(rfp, rotate(w, k)).rep == rep.rep);
      }
      CHECK(sym_closure_rep(rfp, invert(rfp, w)).rep == rep.rep);
      CHECK(rep.orbit_size <= 2 * w.length());
    }
  }
}

TEST_CASE("rendering") {
  FreeProduct fp = z2z3();
  CHECK(render(fp, cw({{1, 1}, {2, 1}, {1, 1}, {2, 2}})) == "a t a t^2");
  CHECK(render(fp, FPWord{}) == "");
}
