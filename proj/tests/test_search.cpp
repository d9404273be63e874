#include <numeric>
#include <random>

#include "doctest.h"
#include "g5rp/pipeline.hpp"

using namespace g5rp;

namespace {
bool has_t(const std::vector<FoundPoint>& pts, const TValue& t) {
  for (auto& p : pts)
    if (p.t == t) return true;
  return false;
}
}  // namespace

TEST_CASE("height bound") {
  HeightBound h(3);
  CHECK(h.contains(TValue::of(Rational(-3) / 2)));
  CHECK(!h.contains(TValue::of(Rational(4))));
  CHECK(h.contains(TValue::infinity()));
  // 1 (inf) + n=1: 7, n=2: 4 (odd m in -3..3), n=3: 4
  CHECK(h.size() == 16);
  CHECK_THROWS(HeightBound(0));
}

TEST_CASE("simultaneous squares: rational system") {
  SearchOptions so{1000, 1};
  auto pts = simultaneous_squares({QPoly({90, 0, 6}), QPoly({270, 0, 6}), QPoly({135, 0, 1})}, so);
  REQUIRE(pts.size() == 2);
  for (auto& p : pts) {
    CHECK(abs(p.t.t) == 3);
    CHECK(abs(p.witnesses[0].a()) == 12);
    CHECK(abs(p.witnesses[1].a()) == 18);
    CHECK(abs(p.witnesses[2].a()) == 12);
  }
  CHECK(simultaneous_squares({QPoly({-1, 0, 0, 0, -1}), QPoly({1, 0, 0, 0, 1})}, so).empty());
}

TEST_CASE("biquartic search") {
  BiquarticModel m{QPoly({4, 40, -64, 20, 1}), QPoly({4, -56, 80, -28, 1}), "test"};
  auto pts = rational_points_biquartic(m, {200, 2});
  CHECK(pts.size() == 4);
  for (auto t : {TValue::infinity(), TValue::of(0), TValue::of(1), TValue::of(2)}) CHECK(has_t(pts, t));
}

TEST_CASE("search agrees with direct evaluation") {
  // exhaustive independent rescan of a small box, plus a 1% sample of a larger one
  QPoly f({1, 0, 1}), g({1, 3, 1});
  auto hits = [&](const Rational& t) { return is_square(f.eval(t)) && is_square(g.eval(t)); };
  long N = 40;
  auto pts = simultaneous_squares({f, g}, {N, 3});
  std::size_t count = 0;
  for (long n = 1; n <= N; ++n)
    for (long m = -N; m <= N; ++m) {
      if (std::gcd(m, n) != 1) continue;
      Rational t = Rational(m) / n;
      bool hit = hits(t);
      count += hit;
      CHECK(has_t(pts, TValue::of(t)) == hit);
    }
  for (auto& p : pts) CHECK((p.t.inf || hits(p.t.t)));
  CHECK(pts.size() == count + (is_square(f.lead()) && is_square(g.lead()) ? 1 : 0));

  long M = 400;
  auto big = simultaneous_squares({f, g}, {M, 2});
  HeightBound hb(M);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-M, M), den(1, M);
  long sample = hb.size() / 100;
  for (long i = 0; i < sample; ++i) {
    long m = num(rng), n = den(rng);
    if (std::gcd(m, n) != 1) continue;
    Rational t = Rational(m) / n;
    CHECK(has_t(big, TValue::of(t)) == hits(t));
  }
}

TEST_CASE("quotient search and pullback") {
  auto pell = build_pell(1, 2);
  auto C = build_curve(pell, pell.model);
  auto cc = C.covering(1, 2);
  auto res = points_on_H_over_L(cc, {{2, 1, -1}, {-6, 1, 1}}, {1000, 1});
  REQUIRE(res.size() == 2);
  CHECK(has_t(res[0].points, TValue::of(-1)));
  CHECK(has_t(res[1].points, TValue::of(1)));
  for (auto& r : res)
    for (auto& p : r.points) CHECK(verify_quotient_point(cc, p));

  auto P = pullback_to_C(C, TValue::of(-1));
  REQUIRE(P);
  CHECK(*P == Coords{1, 3, 5, 7, 9});
  auto Q = pullback_to_C(C, TValue::infinity());
  REQUIRE(Q);
  CHECK(*Q == Coords(5, Rational(1)));

  auto ed = build_edwards();
  auto E = build_curve(ed, ed.model);
  auto ce = E.covering(2, 1);
  REQUIRE(ce.field);
  CHECK(ce.field->value() == -15);
  auto re = points_on_H_over_L(ce, {{-6, 1, -1}}, {1000, 1});
  CHECK(has_t(re[0].points, TValue::of(Rational(-1) / 5)));

  auto fl = build_flynn();
  auto F = build_curve(fl, fl.model);
  auto R = pullback_to_C(F, TValue::of(Rational(8) / 15));
  REQUIRE(R);
  CHECK(*R == Coords{12, 18, 12, 3, 1});
}

TEST_CASE("pullback inverts the change of model on trivial points") {
  for (auto& name : example_names()) {
    auto p = example(name);
    auto C = build_curve(p, p.model);
    for (auto& im : C.trivial_images()) {
      Coords orig = C.to_original(im.point);
      CHECK(C.on_original(orig));
      CHECK(projective_equal(C.from_original(orig), im.point));
      auto back = pullback_to_C(C, im.t);
      REQUIRE(back);
      CHECK(*back == orbit_representative(orig));
    }
  }
}
