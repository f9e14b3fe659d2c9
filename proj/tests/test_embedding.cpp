#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catalog.hpp"
#include "jsonio.hpp"

#include <algorithm>
#include <random>

using namespace sl2real;

namespace {

ProjPoint pt(long x, long y) {
  return ProjPoint::make(CycNum(Rational(x)), CycNum(Rational(y)));
}

OrbitRecord rec(OrbitType t, std::vector<ProjPoint> spokes,
                std::vector<Rational> rs) {
  OrbitRecord r;
  r.type = t;
  r.spokes = std::move(spokes);
  r.rs = std::move(rs);
  return r;
}

EmbeddingAnalyzer analyze(const Embedding& e) {
  return EmbeddingAnalyzer(GroupContext::get(e.group), e);
}

Embedding over(const char* label, std::vector<OrbitRecord> records,
               bool nu0 = false) {
  Embedding e;
  e.group = GroupLabel::parse(label);
  e.records = std::move(records);
  e.has_nu0 = nu0;
  return e;
}

bool has_violation(const ValidityReport& r, const std::string& cond) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const Violation& v) { return v.condition == cond; });
}

}  // namespace

TEST_CASE("colored data per orbit type") {
  Embedding e = over("A1", {
      rec(OrbitType::C, {pt(1, 2)}, {Rational(1, 2)}),
      rec(OrbitType::Bzero, {pt(1, 2)}, {Rational(1, 2)}),
      rec(OrbitType::A, {pt(0, 1), pt(1, 0)}, {Rational(1), Rational(0)}),
      rec(OrbitType::Bplus, {pt(1, 0)}, {Rational(0)}),
  });
  auto an = analyze(e);
  auto c0 = an.colored_data(0);
  REQUIRE(c0.valuations.size() == 1);
  CHECK_FALSE(c0.valuations[0].is_center);
  CHECK(c0.valuations[0].r == Rational(1, 2));
  CHECK(c0.colors == ColoredData::ColorKind::Empty);

  auto c1 = an.colored_data(1);
  CHECK(c1.colors == ColoredData::ColorKind::All);

  auto c2 = an.colored_data(2);
  REQUIRE(c2.valuations.size() == 2);
  CHECK(c2.colors == ColoredData::ColorKind::Complement);
  CHECK(c2.color_points.size() == 2);

  auto c3 = an.colored_data(3);
  CHECK(c3.colors == ColoredData::ColorKind::Explicit);
}

TEST_CASE("facets per orbit type") {
  Embedding e = over("A1", {
      rec(OrbitType::C, {pt(1, 0)}, {Rational(1, 2)}),
      rec(OrbitType::Bplus, {pt(0, 1)}, {Rational(-1)}),
      rec(OrbitType::AB, {pt(1, 1)}, {Rational(0), Rational(1)}),
      rec(OrbitType::A, {pt(1, 2)}, {Rational(0)}),
  }, true);
  auto an = analyze(e);
  IntervalSet c = an.facet_on(0, pt(1, 0));
  CHECK(c == IntervalSet::point(Rational(1, 2)));
  IntervalSet bp = an.facet_on(1, pt(0, 1));
  CHECK(bp == IntervalSet::range(Rational(-1), false, Rational(1), true));
  IntervalSet ab = an.facet_on(2, pt(1, 1));
  CHECK(ab == IntervalSet::range(Rational(0), false, Rational(1), false));
  // A covers unlisted spokes completely and its own spoke below its height
  CHECK(an.facet_on(3, pt(1, 0)) ==
        IntervalSet::range(Rational(-1), false, Rational(1), true));
  CHECK(an.facet_on(3, pt(1, 2)) ==
        IntervalSet::range(Rational(-1), false, Rational(0), false));
}

TEST_CASE("the worked examples validate") {
  Fixture p2 = example_embedding("p2xp1");
  auto an = analyze(p2.embedding);
  auto rep = an.validate();
  CHECK(rep.valid);
  CHECK(an.is_complete());
  CHECK(an.is_quasiprojective());

  Fixture bb = example_embedding("two_bminus");
  auto an2 = analyze(bb.embedding);
  CHECK(an2.validate().valid);
  CHECK_FALSE(an2.is_complete());
  CHECK_FALSE(an2.is_quasiprojective());

  Fixture p3 = example_embedding("p1cubed");
  auto an3 = analyze(p3.embedding);
  CHECK(an3.validate().valid);
  CHECK(an3.is_complete());
  CHECK(an3.is_quasiprojective());
}

TEST_CASE("validity is order independent") {
  Fixture p2 = example_embedding("p2xp1");
  std::mt19937 rng(5);
  for (int iter = 0; iter < 6; ++iter) {
    Embedding e = p2.embedding;
    std::shuffle(e.records.begin(), e.records.end(), rng);
    auto an = analyze(e);
    CHECK(an.validate().valid);
    CHECK(an.is_complete());
  }
}

TEST_CASE("duplicated record violates disjointness") {
  Fixture p2 = example_embedding("p2xp1");
  Embedding e = p2.embedding;
  e.records.push_back(e.records[2]);  // duplicate a C record
  auto rep = analyze(e).validate();
  CHECK_FALSE(rep.valid);
  CHECK(has_violation(rep, "i"));
}

TEST_CASE("an orphaned AB interval is not closed") {
  Embedding e = over("A1",
                     {rec(OrbitType::AB, {pt(1, 0)}, {Rational(0), Rational(1, 2)})});
  auto rep = analyze(e).validate();
  CHECK_FALSE(rep.valid);
  REQUIRE(has_violation(rep, "ii"));
  // witness sits at a missing endpoint
  for (const auto& v : rep.violations) {
    if (v.condition != "ii") continue;
    REQUIRE(v.r.has_value());
    CHECK((*v.r == Rational(0) || *v.r == Rational(1, 2)));
  }
}

TEST_CASE("B+(j,-1) requires the nu0 divisor") {
  Embedding e = over("A1", {rec(OrbitType::Bplus, {pt(1, 0)}, {Rational(-1)})});
  auto rep = analyze(e).validate();
  CHECK_FALSE(rep.valid);
  CHECK(has_violation(rep, "iv"));

  // with the divisor, the all-B+ embedding is valid and complete
  Embedding e2 = over("E6", {}, true);
  // special spokes must be covered explicitly
  for (const auto& s : GroupContext::get(e2.group)->diagram().special)
    e2.records.push_back(
        rec(OrbitType::Bplus, {s.orbit.representative}, {Rational(-1)}));
  auto an2 = analyze(e2);
  auto rep2 = an2.validate();
  CHECK(rep2.valid);
  CHECK(an2.is_complete());

  // without the explicit special-spoke coverage, closedness fails
  Embedding e3 = over("E6", {}, true);
  auto rep3 = analyze(e3).validate();
  CHECK_FALSE(rep3.valid);
  CHECK(has_violation(rep3, "ii"));
}

TEST_CASE("two A records overlap on the generic channel") {
  Embedding e = over("A1", {
      rec(OrbitType::A, {pt(1, 0)}, {Rational(0)}),
      rec(OrbitType::A, {pt(0, 1)}, {Rational(0)}),
  });
  auto rep = analyze(e).validate();
  CHECK_FALSE(rep.valid);
  CHECK(has_violation(rep, "i"));
}

TEST_CASE("an A record swallows spokes it does not list") {
  // the A facet covers every unlisted spoke completely, so any other
  // record on such a spoke collides with it
  Embedding e = over("A1", {
      rec(OrbitType::A, {pt(1, 0)}, {Rational(0)}),
      rec(OrbitType::C, {pt(1, 1)}, {Rational(1)}),
  });
  auto rep = analyze(e).validate();
  CHECK_FALSE(rep.valid);
  CHECK(has_violation(rep, "i"));
}

TEST_CASE("the nu0 variant of a completion validates") {
  // over E6: AB plus its endpoint C on the marked spoke, full B+ spokes
  // on the other specials, and the nu0 divisor on the generic channel
  auto ctx = GroupContext::get(GroupLabel::parse("E6"));
  CycNum z12 = CycNum::zeta(12);
  ProjPoint j1 =
      ctx->orbit_of(ProjPoint::make(CycNum(1), z12 + z12.pow(2))).representative;
  Embedding e;
  e.group = ctx->label();
  e.has_nu0 = true;
  e.records = {
      rec(OrbitType::AB, {j1}, {Rational(-1), Rational(-1, 2)}),
      rec(OrbitType::C, {j1}, {Rational(-1, 2)}),
  };
  for (const auto& s : ctx->diagram().special) {
    if (s.orbit.representative == j1) continue;
    e.records.push_back(
        rec(OrbitType::Bplus, {s.orbit.representative}, {Rational(-1)}));
  }
  auto an = analyze(e);
  CHECK(an.validate().valid);
  CHECK(an.is_complete());
  CHECK(an.is_quasiprojective());
}

TEST_CASE("spokes may be given by any orbit member") {
  // the same embedding written with non-canonical representatives
  Fixture fx = minimal_completion(GroupLabel::parse("D5"));
  auto ctx = GroupContext::get(fx.embedding.group);
  CycNum z3 = CycNum::zeta(3);
  Embedding alt = fx.embedding;
  for (auto& r : alt.records)
    for (auto& p : r.spokes) {
      REQUIRE(p == pt(1, 1));
      p = ProjPoint::make(CycNum(1), z3);  // another point of the orbit
    }
  EmbeddingAnalyzer a1(ctx, fx.embedding), a2(ctx, alt);
  CHECK(a2.validate().valid);
  CHECK(a2.is_complete());
  // canonicalization makes the two embeddings literally identical
  CHECK(embedding_to_json(a1.embedding()) == embedding_to_json(a2.embedding()));
}

TEST_CASE("record-level range violations") {
  // A-type mass condition: sum 1/(1+r) >= 1 fails for a single leg at r=1
  Embedding e = over("A1", {rec(OrbitType::A, {pt(1, 0)}, {Rational(1)})});
  auto rep = analyze(e).validate();
  CHECK_FALSE(rep.valid);
  CHECK(has_violation(rep, "record"));

  // C height beyond the spoke end
  Embedding e2 = over("E6", {rec(OrbitType::C, {pt(1, 0)}, {Rational(0)})});
  CHECK(has_violation(analyze(e2).validate(), "record"));

  // B- needs 0 < r < b, impossible over non-cyclic groups
  Embedding e3 = over("D4", {rec(OrbitType::Bminus, {pt(1, 0)}, {Rational(1, 4)})});
  CHECK(has_violation(analyze(e3).validate(), "record"));

  // AB needs r1 < r2
  Embedding e4 = over("A1",
                      {rec(OrbitType::AB, {pt(1, 0)}, {Rational(1), Rational(0)})});
  CHECK(has_violation(analyze(e4).validate(), "record"));

  // repeated spoke inside an A record
  Embedding e5 = over("A1", {rec(OrbitType::A, {pt(1, 0), pt(1, 0)},
                                 {Rational(0), Rational(0)})});
  CHECK(has_violation(analyze(e5).validate(), "record"));
}

TEST_CASE("empty embedding is the trivial one") {
  Embedding e = over("A2", {});
  auto an = analyze(e);
  CHECK(an.validate().valid);
  CHECK_FALSE(an.is_complete());
  CHECK(an.is_quasiprojective());
}

TEST_CASE("single B0 alongside its C orbit is quasiprojective") {
  Embedding e = over("A2", {
      rec(OrbitType::C, {pt(1, 0)}, {Rational(1, 2)}),
      rec(OrbitType::Bzero, {pt(1, 0)}, {Rational(1, 2)}),
  });
  auto an = analyze(e);
  CHECK(an.validate().valid);
  CHECK(an.is_quasiprojective());
}

TEST_CASE("facet boundaries agree with the colored data") {
  // per type, the heights of V_Y show up as boundary points of the facet
  Embedding e = over("A2", {
      rec(OrbitType::C, {pt(1, 0)}, {Rational(1, 2)}),
      rec(OrbitType::AB, {pt(1, 0)}, {Rational(-1, 2), Rational(1, 4)}),
      rec(OrbitType::Bplus, {pt(0, 1)}, {Rational(0)}),
      rec(OrbitType::A, {pt(1, 1)}, {Rational(3, 4)}),
  });
  auto an = analyze(e);
  for (size_t i = 0; i < e.records.size(); ++i) {
    auto cd = an.colored_data(i);
    for (const auto& v : cd.valuations) {
      if (v.is_center) continue;  // AB at r1 = -1 touches the center
      IntervalSet f = an.facet_on(i, v.spoke);
      REQUIRE_FALSE(f.empty());
      const Interval& part = f.parts().front();
      bool is_boundary = part.lo == v.r || part.hi == v.r;
      CAPTURE(i);
      CHECK(is_boundary);
    }
  }
}

TEST_CASE("the closedness checker is idempotent on valid embeddings") {
  // on a valid embedding, the computed closure of the facet union equals
  // the union itself, channel by channel
  std::vector<Embedding> fixtures;
  for (const char* name : {"p2xp1", "two_bminus", "p1cubed"})
    fixtures.push_back(example_embedding(name).embedding);
  for (const char* l : {"D4", "D6", "E6", "E8"})
    fixtures.push_back(minimal_completion(GroupLabel::parse(l)).embedding);
  for (const auto& e : fixtures) {
    auto an = analyze(e);
    REQUIRE(an.validate().valid);
    IntervalSet u_default;
    for (size_t i = 0; i < e.records.size(); ++i)
      u_default.add(an.facet_default(i));
    for (const auto& ch : an.channels()) {
      IntervalSet u;
      for (size_t i = 0; i < e.records.size(); ++i) u.add(an.facet_on(i, ch));
      IntervalSet cl = u.closure(Rational(-1));
      if (!u_default.empty()) cl.add(u_default.closure(Rational(-1)));
      CHECK(cl == u);
    }
    CHECK(u_default.closure(Rational(-1)) == u_default);
  }
}

TEST_CASE("embedding JSON round trip") {
  for (const char* name : {"p2xp1", "two_bminus", "p1cubed"}) {
    Fixture fx = example_embedding(name);
    Json j = embedding_to_json(fx.embedding);
    Embedding back = embedding_from_json(j);
    CHECK(embedding_to_json(back) == j);
    CHECK(back.group == fx.embedding.group);
    CHECK(back.records.size() == fx.embedding.records.size());
  }
}

TEST_CASE("embedding JSON rejects malformed input") {
  CHECK_THROWS_AS(embedding_from_json(Json{{"group", "A1"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      embedding_from_json(Json{{"group", "Q9"}, {"nu0", false}, {"orbits", Json::array()}}),
      std::invalid_argument);
  Json bad_orbit{{"group", "A1"},
                 {"nu0", false},
                 {"orbits", Json::array({Json{{"type", "Z"},
                                              {"spokes", Json::array()},
                                              {"r", Json::array()}}})}};
  CHECK_THROWS_AS(embedding_from_json(bad_orbit), std::invalid_argument);
}
