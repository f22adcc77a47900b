#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helix/classify.hpp"
#include "helix/corpus.hpp"
#include "helix/errors.hpp"
#include "helix/quadform.hpp"

using namespace helix;

namespace {

DiagSolution diag(long x, long y, long d, long D) { return {make_int(x), make_int(y), make_int(d), make_int(D)}; }

}  // namespace

TEST_CASE("diagonal form examples") {
  DiagSolution a = to_diag(make_int(2), make_int(1), make_int(5));
  CHECK(a.x == 3);
  CHECK(a.y == -1);
  CHECK(a.D == 5);
  CHECK(3 * 9 - 7 * 1 == 4 * 5);
  for (long d = 3; d <= 20; ++d) {
    DiagSolution s = to_diag(make_int(1), make_int(1), make_int(d));
    CHECK(s.x == 2);
    CHECK(s.y == 0);
    CHECK(s.D == d - 2);
  }
  DiagSolution c = to_diag(make_int(3), make_int(1), make_int(10));
  CHECK(c.x == 4);
  CHECK(c.y == -2);
  CHECK(satisfies_diag(c));
  CHECK_THROWS_AS(to_diag(make_int(4), make_int(1), make_int(3)), DomainError);
}

TEST_CASE("Pell associate examples") {
  PellSolution a = to_pell(diag(3, -1, 5, 5));
  CHECK(a.X == -84);
  CHECK(a.Y == 18);
  CHECK(84 * 84 - 4 * 21 * 18 * 18 == -64 * 21 * 3 * 5);
  for (long d = 3; d <= 20; ++d) {
    PellSolution s = to_pell(diag(2, 0, d, d - 2));
    CHECK(s.X == 0);
    CHECK(s.Y == 4 * (d - 2));
    CHECK(satisfies_pell(s));
  }
  PellSolution c = to_pell(diag(4, -2, 10, 20));
  CHECK(c.X == -768);
  CHECK(c.Y == 64);
  CHECK(satisfies_pell(c));
  CHECK_FALSE(satisfies_diag(diag(3, -1, 5, 6)));
  CHECK_THROWS_AS(to_pell(diag(3, -1, 5, 6)), InternalError);
}

TEST_CASE("both invariants hold along every orbit") {
  for (long d = 3; d <= 12; ++d) {
    for (long D = 1; D <= 150; ++D) {
      for (const RankOrbit& o : rank_solutions(make_int(d), make_int(D))) {
        Int a = o.r_m1, b = o.r_0;
        // Walk 20 steps back, then 40 forward: shifts -20..20.
        for (int k = 0; k < 20; ++k) {
          Int prev = make_int(d) * a - b;
          b = a;
          a = prev;
        }
        for (int k = 0; k <= 40; ++k) {
          DiagSolution s = to_diag(a, b, make_int(d));
          REQUIRE(s.D == D);
          REQUIRE(satisfies_diag(s));
          REQUIRE(satisfies_pell(to_pell(s)));
          Int next = make_int(d) * b - a;
          a = b;
          b = next;
        }
      }
    }
  }
}

TEST_CASE("shift action on corpus rank pairs preserves the diagonal form") {
  for (const Seed& s : corpus_seeds()) {
    const Int d = seed_det(s);
    auto w = rank_deg_window(s, -20, 20);
    for (std::size_t k = 1; k < w.size(); ++k) {
      DiagSolution here = to_diag(w[k - 1].rank, w[k].rank, d);
      REQUIRE(here.D == big_D(s));
      REQUIRE(satisfies_pell(to_pell(here)));
    }
  }
}
