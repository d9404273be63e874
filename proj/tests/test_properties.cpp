// Randomized property suites. Seeds are fixed.
#include <random>

#include "doctest.h"
#include "g5rp/pipeline.hpp"
#include "g5rp/quartic.hpp"
#include "oracles.hpp"

using namespace g5rp;

namespace {
std::mt19937_64& rng() {
  static std::mt19937_64 g(20240601);
  return g;
}
long rnd(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }
long rnd_nonzero(long lo, long hi) {
  long v = 0;
  while (v == 0) v = rnd(lo, hi);
  return v;
}
}  // namespace

TEST_CASE("product identity for quartics with rational resolvent roots") {
  int cases = 0, flat = 0;
  while (cases < 200) {
    long u = rnd(-9, 9), v = rnd(-9, 9), w = rnd(-9, 9), x = rnd(-9, 9);
    if (cases % 10 == 0) w = u;  // equal linear terms put the pairing on the Delta2 = 0 branch
    QPoly q = QPoly({v, u, 1}) * QPoly({x, w, 1});
    if (!is_separable(q)) continue;
    auto betas = rational_roots(cubic_resolvent(q));
    REQUIRE(!betas.empty());
    for (auto& b : betas) {
      QuarticFactorization f;
      try {
        f = factor_over_quadratic(q, b);
      } catch (const MathError&) {
        continue;  // this pairing needs a quartic field
      }
      CHECK(f.p1 * f.p2 == to_lpoly(q));
      if (f.delta2_zero) ++flat;
    }
    ++cases;
  }
  CHECK(flat >= 10);
}

TEST_CASE("split quartic identities") {
  int cases = 0, special = 0;
  while (cases < 100) {
    std::array<Rational, 4> al;
    for (auto& a : al) a = rnd(-12, 12);
    if (cases % 5 == 0) al[3] = al[0] + al[1] - al[2];  // gamma_2 = 0
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && al[i] != al[j];
    if (!distinct) continue;
    auto sv = phi_special_values(al);
    CHECK(sv.matches_map);
    CHECK(sv.E.on_curve(sv.at_plus));
    CHECK(sv.E.on_curve(sv.at_minus));
    for (auto& P : sv.at_roots) CHECK(sv.E.on_curve(P));
    for (int i = 2; i <= 4; ++i) {
      auto rep = shift_two_torsion(al, i);
      CHECK(rep.holds);
      CHECK(rep.B != 0);
      special += rep.special;
    }
    ++cases;
  }
  CHECK(special >= 10);
}

TEST_CASE("diagonal genus one trivial points") {
  int cases = 0;
  while (cases < 100) {
    std::array<Rational, 4> x;
    for (auto& v : x) v = rnd_nonzero(-6, 6);
    Rational a = rnd_nonzero(-7, 7), c = rnd_nonzero(-7, 7);
    Rational b = (x[2] * x[2] - a * x[0] * x[0]) / (x[1] * x[1]);
    Rational d = (x[3] * x[3] - c * x[0] * x[0]) / (x[1] * x[1]);
    std::optional<DiagonalGenus1> C;
    try {
      C.emplace(a, b, c, d, x);
    } catch (const MathError&) {
      continue;
    }
    QCurve E = C->jacobian();
    auto rows = C->trivial_points();
    REQUIRE(rows.size() == 8);
    QPoly q = C->quartic();
    std::vector<QPoint> sums;
    for (auto& T : two_torsion(E)) {
      sums.push_back(T);
      sums.push_back(E.add(rows[4].P, T));
    }
    std::vector<QPoint> seen;
    for (auto& r : rows) {
      CHECK(E.on_curve(r.P));
      if (!r.Q.at_infinity) CHECK(r.Q.v * r.Q.v == q.eval(r.Q.u));
      CHECK(std::find(sums.begin(), sums.end(), r.P) != sums.end());
      seen.push_back(r.P);
    }
    for (auto& s : sums) CHECK(std::find(seen.begin(), seen.end(), s) != seen.end());
    ++cases;
  }
}

TEST_CASE("local solver monotone in the prime list") {
  // adding primes can only turn yes into no, never no into yes
  for (int i = 0; i < 20; ++i) {
    QPoly f({rnd(-20, 20), rnd(-20, 20), rnd(-20, 20), rnd(-20, 20), 1});
    if (!is_separable(f)) continue;
    long c = rnd_nonzero(-30, 30);
    auto small = locally_solvable_everywhere(c, to_lpoly(f), std::nullopt, {2}, 5);
    auto big = locally_solvable_everywhere(c, to_lpoly(f), std::nullopt, {2}, 50);
    if (small.result == Tri::no) CHECK(big.result == Tri::no);
  }
}

TEST_CASE("split places agree with Q_p") {
  SquarefreeDisc D(-15);  // 2 splits; so do 17, 19, 23
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    long p = std::vector<long>{2, 17, 19, 23}[rnd(0, 3)];
    QPoly f({rnd(-40, 40), rnd(-40, 40), rnd(-40, 40), rnd(-40, 40), rnd_nonzero(-5, 5)});
    if (!is_separable(f)) continue;
    long c = rnd_nonzero(-60, 60);
    bool qp = has_Qp_point(c, f, p);
    for (auto& pl : places_above(p, D)) {
      REQUIRE(pl.type == Splitting::split);
      CHECK(has_Lv_point(QuadElem(c), to_lpoly(f), pl) == (qp ? Tri::yes : Tri::no));
    }
    ++checked;
  }
  CHECK(checked > 80);
}
