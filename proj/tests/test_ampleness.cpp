#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helix/ampleness.hpp"
#include "helix/corpus.hpp"
#include "helix/errors.hpp"
#include "test_support.hpp"

using namespace helix;
using helix::testing::Gen;

namespace {

Seed seed(long r_m1, long r_0, long d_m1, long d_0) {
  return Seed(make_int(r_m1), make_int(r_0), make_int(d_m1), make_int(d_0));
}

QuadNum quad(const char* a, const char* b, long n) { return QuadNum(parse_rat(a), parse_rat(b), make_int(n)); }

}  // namespace

TEST_CASE("determinant test examples") {
  CHECK(ample_det_check(seed(2, 1, -3, 1), make_int(5)));
  // Three-periodic d = 4: rows (d-2, -d), (1, 0), recurrence parameter d - 1.
  CHECK(ample_det_check(seed(2, 1, -4, 0), make_int(3)));
  CHECK_FALSE(ample_det_check(seed(1, 1, 0, 1), make_int(3)));
  CHECK_THROWS_AS(ample_det_check(seed(1, 1, 0, 2), make_int(2)), NotApplicableError);
}

TEST_CASE("limit product examples") {
  QuadNum a = limit_product(seed(2, 1, -3, 1));
  CHECK(a == quad("0", "5/21", 21));
  CHECK(a > QuadNum(1));
  CHECK(limit_product(seed(1, 1, 0, 3)) == quad("0", "3/5", 5));
  for (long d = 3; d <= 30; ++d) {
    QuadNum v = limit_product(seed(1, 1, 0, d));
    CHECK(v * v == QuadNum(Rat(make_int(d * d), make_int(d * d - 4))));
    CHECK(v > QuadNum(1));
  }
  CHECK_THROWS_AS(limit_product(seed(1, 1, 0, 2)), NotApplicableError);
}

TEST_CASE("two-periodic ampleness examples") {
  CHECK(ample_two_periodic(seed(3, 1, -7, 1)));
  CHECK(ample_two_periodic(seed(4, 7, 9, 17)));
  CHECK_THROWS_AS(ample_two_periodic(seed(4, 1, 1, 1)), NotApplicableError);
  CHECK_THROWS_AS(ample_two_periodic(seed(1, 1, 0, 2)), NotApplicableError);
  for (const Seed& s : corpus_seeds()) CHECK(ample_two_periodic(s));
}

TEST_CASE("three-periodic sequence examples") {
  ThreePeriodicSeq three = three_periodic_seq(make_int(3), -2, 2);
  CHECK(three.at(-1).degree == -3);
  CHECK(three.at(-1).rank == 1);
  CHECK(three.at(-2).degree == -6);
  CHECK(three.at(-2).rank == 1);
  CHECK(three_periodic_seq(make_int(4), 0, 2).at(2).degree == 12);
  CHECK(three_periodic_seq(make_int(4), 0, 2).at(2).rank == 2);
  for (long d = 3; d <= 20; ++d) {
    ThreePeriodicSeq s = three_periodic_seq(make_int(d), -2, 2);
    CHECK(s.at(-1).degree == -d);
    CHECK(s.at(-1).rank == d - 2);
    CHECK(s.at(-2).degree == -d * d + d);
    CHECK(s.at(-2).rank == d * d - 3 * d + 1);
  }
  CHECK_THROWS_AS(three_periodic_seq(make_int(2), 0, 1), InputError);
  CHECK_THROWS_AS(three.at(5), InputError);
}

TEST_CASE("three-periodic recurrence is consistent in both directions") {
  for (long d = 3; d <= 20; ++d) {
    ThreePeriodicSeq s = three_periodic_seq(make_int(d), -30, 30);
    for (long n = -27; n <= 30; ++n) {
      REQUIRE(s.at(n).rank ==
              make_int(d) * s.at(n - 1).rank - make_int(d) * s.at(n - 2).rank + s.at(n - 3).rank);
      REQUIRE(s.at(n).degree ==
              make_int(d) * s.at(n - 1).degree - make_int(d) * s.at(n - 2).degree + s.at(n - 3).degree);
    }
    for (long n = -30; n <= 30; ++n) REQUIRE(s.at(n).rank > 0);
  }
}

TEST_CASE("three-periodic ampleness and cross products") {
  CHECK(three_periodic_ample(make_int(3)));
  CHECK(three_periodic_ample(make_int(10)));
  for (long d = 3; d <= 20; ++d) {
    CHECK(three_periodic_cross_products(make_int(d)));
    CHECK(three_periodic_ample(make_int(d)));
  }
}

TEST_CASE("finite-window products approach the limit monotonically") {
  Gen gen;
  std::vector<Seed> seeds = corpus_seeds();
  for (int trial = 0; trial < 50; ++trial) seeds.push_back(gen.extendable_seed());
  for (const Seed& s : seeds) {
    const QuadNum limit = limit_product(s);
    const QuadNum t = theta(s).value();
    QuadNum previous_gap;
    bool first = true;
    for (const WindowEntry& e : rank_deg_window(s, -40, -10)) {
      // Ascending index: the gap must grow as n increases.
      QuadNum gap = quad_abs(window_product(e.rank, e.degree, t) - limit);
      REQUIRE(quad_sign(gap) > 0);
      if (!first) REQUIRE(previous_gap < gap);
      previous_gap = gap;
      first = false;
    }
  }
}
