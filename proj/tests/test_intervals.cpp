#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "intervals.hpp"

#include <random>

using namespace sl2real;

TEST_CASE("interval basics") {
  Interval empty{Rational(1), Rational(1), true, false};
  CHECK_FALSE(empty.valid());
  Interval point{Rational(1), Rational(1), true, true};
  CHECK(point.valid());
  CHECK(point.contains(Rational(1)));

  IntervalSet s = IntervalSet::range(Rational(0), false, Rational(1), true);
  CHECK(s.contains(Rational(1)));
  CHECK(s.contains(Rational(1, 2)));
  CHECK_FALSE(s.contains(Rational(0)));
}

TEST_CASE("union merges touching pieces") {
  IntervalSet s = IntervalSet::range(Rational(-1), false, Rational(0), false);
  s.add(IntervalSet::point(Rational(0)));
  s.add(IntervalSet::range(Rational(0), false, Rational(1), true));
  REQUIRE(s.parts().size() == 1);
  CHECK(s.parts()[0].lo == Rational(-1));
  CHECK_FALSE(s.parts()[0].lo_closed);
  CHECK(s.parts()[0].hi == Rational(1));
  CHECK(s.parts()[0].hi_closed);

  // open pieces that merely touch stay separate
  IntervalSet t = IntervalSet::range(Rational(0), false, Rational(1), false);
  t.add(IntervalSet::range(Rational(1), false, Rational(2), false));
  CHECK(t.parts().size() == 2);
  CHECK_FALSE(t.contains(Rational(1)));
}

TEST_CASE("closure clips the space boundary") {
  IntervalSet s = IntervalSet::range(Rational(-1), false, Rational(0), false);
  IntervalSet cl = s.closure(Rational(-1));
  REQUIRE(cl.parts().size() == 1);
  CHECK_FALSE(cl.parts()[0].lo_closed);  // -1 stays outside the space
  CHECK(cl.parts()[0].hi_closed);
  CHECK(cl.contains(Rational(0)));
}

TEST_CASE("subtract and subset") {
  IntervalSet a = IntervalSet::range(Rational(0), true, Rational(1), true);
  IntervalSet b = IntervalSet::range(Rational(0), false, Rational(1), false);
  IntervalSet d = a.subtract(b);
  REQUIRE(d.parts().size() == 2);
  CHECK(d.contains(Rational(0)));
  CHECK(d.contains(Rational(1)));
  CHECK_FALSE(d.contains(Rational(1, 2)));
  CHECK(a.contains(b));
  CHECK_FALSE(b.contains(a));
}

namespace {

// randomized cross-check of set algebra against pointwise membership
Rational grid_point(int i) { return Rational(i, 4); }

IntervalSet random_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> pieces(0, 3), coord(-4, 4), flip(0, 1);
  IntervalSet s;
  int np = pieces(rng);
  for (int p = 0; p < np; ++p) {
    int a = coord(rng), b = coord(rng);
    if (a > b) std::swap(a, b);
    Interval i{grid_point(a), grid_point(b), flip(rng) == 1, flip(rng) == 1};
    if (i.valid()) s.add(i);
  }
  return s;
}

}  // namespace

TEST_CASE("set operations agree with pointwise membership") {
  std::mt19937 rng(2024);
  // probe on grid points and midpoints between them
  std::vector<Rational> probes;
  for (int i = -16; i <= 16; ++i) probes.push_back(Rational(i, 8));
  for (int iter = 0; iter < 400; ++iter) {
    IntervalSet a = random_set(rng), b = random_set(rng);
    IntervalSet uni = a;
    uni.add(b);
    IntervalSet inter = a.intersect(b);
    IntervalSet diff = a.subtract(b);
    for (const auto& p : probes) {
      bool ia = a.contains(p), ib = b.contains(p);
      CHECK(uni.contains(p) == (ia || ib));
      CHECK(inter.contains(p) == (ia && ib));
      CHECK(diff.contains(p) == (ia && !ib));
    }
    CHECK(a.contains(inter));
    CHECK(uni.contains(a));
    CHECK(a.subtract(a).empty());
    // closure is idempotent and contains the set
    IntervalSet cl = a.closure(Rational(-10));
    CHECK(cl.contains(a));
    CHECK(cl.closure(Rational(-10)) == cl);
  }
}
