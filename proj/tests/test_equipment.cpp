#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "equipment.hpp"

using namespace sl2real;

namespace {

ProjPoint pt(long x, long y) {
  return ProjPoint::make(CycNum(Rational(x)), CycNum(Rational(y)));
}

const GroupContext& ctx(const char* l) {
  static std::vector<std::shared_ptr<const GroupContext>> keep;
  auto c = GroupContext::get(GroupLabel::parse(l));
  keep.push_back(c);
  return *c;
}

// beta1 = (1+i)(1+sqrt3)/2 = zeta12 + zeta12^2
CycNum beta1() {
  CycNum z = CycNum::zeta(12);
  return z + z.pow(2);
}

}  // namespace

TEST_CASE("projective points normalize") {
  CHECK(pt(2, 6) == pt(1, 3));
  CHECK(pt(0, 5) == pt(0, 1));
  CHECK_THROWS_AS(ProjPoint::make(CycNum(0), CycNum(0)), std::invalid_argument);
  // row action
  CHECK(act(pt(1, 0), mat_f()) == pt(0, 1));
  CHECK(act(pt(1, 1), mat_omega(4)) == pt(1, -1));
}

TEST_CASE("color orbits") {
  auto& D4 = ctx("D4").group();
  ColorOrbit j = color_orbit(D4, pt(1, 0));
  CHECK(j.size() == 2);
  CHECK(j.contains(pt(1, 0)));
  CHECK(j.contains(pt(0, 1)));

  CHECK(color_orbit(ctx("A1").group(), pt(1, 5)).size() == 1);

  auto& E6 = ctx("E6").group();
  ColorOrbit j1 = color_orbit(E6, ProjPoint::make(CycNum(1), beta1()));
  CHECK(j1.size() == 4);

  // idempotence under re-canonicalization
  ColorOrbit again = color_orbit(E6, j1.representative);
  CHECK(again.representative == j1.representative);
  CHECK(again.points == j1.points);
}

TEST_CASE("the beta1 orbit is cut out by w^4 + x^4 - 2 sqrt3 i w^2 x^2") {
  auto& E6 = ctx("E6").group();
  ColorOrbit j1 = color_orbit(E6, ProjPoint::make(CycNum(1), beta1()));
  REQUIRE(j1.size() == 4);
  // all four points are affine [1 : root]
  std::vector<CycNum> roots;
  for (const auto& p : j1.points) {
    REQUIRE(p.x == CycNum(1));
    roots.push_back(p.y);
  }
  // elementary symmetric functions of the roots of the quartic
  CycNum e1(0), e2(0), e3(0), e4(1);
  for (const auto& r : roots) e4 *= r;
  for (size_t a = 0; a < 4; ++a) {
    e1 += roots[a];
    for (size_t b = a + 1; b < 4; ++b) {
      e2 += roots[a] * roots[b];
      for (size_t c = b + 1; c < 4; ++c) e3 += roots[a] * roots[b] * roots[c];
    }
  }
  CycNum z12 = CycNum::zeta(12);
  CycNum sqrt3 = z12 + z12.inverse();
  CycNum i = CycNum::zeta(4);
  CHECK(e1 == CycNum(0));
  CHECK(e3 == CycNum(0));
  CHECK(e2 == -(CycNum(2) * sqrt3 * i));
  CHECK(e4 == CycNum(1));
}

TEST_CASE("spoke lengths") {
  auto& E6 = ctx("E6").group();
  ColorOrbit j1 = color_orbit(E6, ProjPoint::make(CycNum(1), beta1()));
  CHECK(spoke_b(j1) == Rational(-1, 2));
  CHECK(ctx("E7").diagram().generic_b == Rational(-11, 12));
  CHECK(spoke_b(color_orbit(ctx("A2").group(), pt(3, 7))) == Rational(1));
}

TEST_CASE("diagrams reproduce the printed spoke data") {
  auto check_diagram = [](const char* l, std::vector<Rational> special_b,
                          size_t generic_size, Rational generic_b) {
    const Diagram& d = ctx(l).diagram();
    CAPTURE(l);
    REQUIRE(d.special.size() == special_b.size());
    for (size_t i = 0; i < special_b.size(); ++i)
      CHECK(d.special[i].b == special_b[i]);
    CHECK(d.generic_size == generic_size);
    CHECK(d.generic_b == generic_b);
  };
  check_diagram("A1", {}, 1, Rational(1));
  check_diagram("A2", {}, 1, Rational(1));
  // A_n, n >= 3: two unit spokes, generic b = 4/m - 1 with m = lcm(2, n)
  check_diagram("A3", {Rational(1), Rational(1)}, 3, Rational(-1, 3));
  check_diagram("A5", {Rational(1), Rational(1)}, 5, Rational(-3, 5));
  check_diagram("A8", {Rational(1), Rational(1)}, 4, Rational(-1, 2));
  // D_n: 0 and twice (4-n)/(n-2); generic (3-n)/(n-2)
  check_diagram("D4", {Rational(0), Rational(0), Rational(0)}, 4,
                Rational(-1, 2));
  check_diagram("D5", {Rational(0), Rational(-1, 3), Rational(-1, 3)}, 6,
                Rational(-2, 3));
  check_diagram("D8", {Rational(0), Rational(-2, 3), Rational(-2, 3)}, 12,
                Rational(-5, 6));
  check_diagram("E6", {Rational(-1, 2), Rational(-1, 2), Rational(-2, 3)}, 12,
                Rational(-5, 6));
  check_diagram("E7", {Rational(-2, 3), Rational(-3, 4), Rational(-5, 6)}, 24,
                Rational(-11, 12));
  check_diagram("E8",
                {Rational(-5, 6), Rational(-9, 10), Rational(-14, 15)}, 60,
                Rational(-29, 30));
}

TEST_CASE("special orbit counts per family") {
  CHECK(ctx("A1").diagram().special.size() == 0);
  CHECK(ctx("A6").diagram().special.size() == 2);
  CHECK(ctx("D6").diagram().special.size() == 3);
  CHECK(ctx("E6").diagram().special.size() == 3);
  CHECK(ctx("E7").diagram().special.size() == 3);
  CHECK(ctx("E8").diagram().special.size() == 3);
}

TEST_CASE("orbit sizes divide the PGL2 image order") {
  for (const char* l : {"A4", "A5", "D4", "D7", "E6", "E7", "E8"}) {
    const Diagram& d = ctx(l).diagram();
    for (const auto& s : d.special) CHECK(d.generic_size % s.orbit.size() == 0);
  }
}

// Independent route to b(j): evaluate the invariant product of linear
// forms over the whole group and normalize so generic orbits sit at -1.
TEST_CASE("b matches the valuation-normalization oracle") {
  auto oracle_b = [](const FiniteSubgroup& H, const ProjPoint& p) {
    ColorOrbit j = color_orbit(H, p);
    long hits = 0;
    ProjPoint target = j.representative;
    for (const auto& h : H.elements()) {
      ProjPoint q = act(j.representative, h);
      if (q == target) ++hits;
    }
    // value of nu(j,1) on prod_{h in H} (form at rep.h), normalized by |H|
    long total = static_cast<long>(H.order());
    return Rational(hits * 1 + (total - hits) * -1, total);
  };
  for (const char* l : {"A3", "A4", "D4", "D5", "E6", "E7", "E8"}) {
    auto& H = ctx(l).group();
    const Diagram& d = ctx(l).diagram();
    for (const auto& s : d.special) {
      CHECK(oracle_b(H, s.orbit.representative) == s.b);
    }
  }
  // a few generic points as well
  CHECK(oracle_b(ctx("E6").group(), pt(2, 3)) == Rational(-5, 6));
  CHECK(oracle_b(ctx("D5").group(), pt(5, 2)) == Rational(-2, 3));
}

TEST_CASE("valuations and ranges") {
  auto& E6 = ctx("E6");
  ColorOrbit generic = E6.orbit_of(pt(2, 3));
  // endpoint is fine
  Valuation v = make_valuation(generic, Rational(-5, 6));
  CHECK_FALSE(v.is_center);
  // the center is shared by all spokes
  ColorOrbit special = E6.diagram().special[0].orbit;
  CHECK(make_valuation(generic, Rational(-1)) ==
        make_valuation(special, Rational(-1)));
  // out of range
  CHECK_THROWS_AS(make_valuation(generic, Rational(-1, 2)), std::domain_error);
  CHECK_THROWS_AS(make_valuation(generic, Rational(-2)), std::domain_error);
}
