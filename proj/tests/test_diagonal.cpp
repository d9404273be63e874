#include <map>
#include <set>

#include "doctest.h"
#include "g5rp/pipeline.hpp"
#include "g5rp/quartic.hpp"

using namespace g5rp;

namespace {
Rational r(long n, long d = 1) { return Rational(n) / d; }

DiagonalGenus1 pell_g1() { return DiagonalGenus1(-1, 2, r(-2, 3), r(5, 3), {1, 1, 1, 1}); }

QMatrix pell_rc() { return {{-1, 2}, {r(-2, 3), r(5, 3)}, {r(7, 3), r(-4, 3)}}; }
}  // namespace

TEST_CASE("conic parametrization") {
  auto C = pell_g1();
  auto P = C.P0();
  CHECK(C.inverse({P[0], P[1], P[2]}) == C.base_parameter());
  auto polys = C.conic_polys();
  CHECK(polys[0] * polys[0] * QPoly({-1}) + polys[1] * polys[1] * QPoly({2}) == polys[2] * polys[2]);
  for (long k = -10; k < 10; ++k) {
    TValue t = TValue::of(r(k, 3));
    auto X = C.forward(t);
    CHECK(-X[0] * X[0] + 2 * X[1] * X[1] == X[2] * X[2]);
    CHECK(C.inverse(X) == t);
  }
}

TEST_CASE("quartic from the diagonal model") {
  auto C = pell_g1();
  QPoly p = C.quartic();
  CHECK(p.degree() == 4);
  CHECK(p.lead() == 1);
  const auto& x = C.P0();
  Rational x3 = x[3], x38 = x3 * x3 * x3 * x3 * x3 * x3 * x3 * x3;
  CHECK(p.coeff(0) == C.a() * C.a() * C.b() * C.b() * x38);
  CHECK(discriminant(p) != 0);
  for (auto& row : C.trivial_points()) {
    if (row.Q.at_infinity) continue;
    CHECK(row.Q.v * row.Q.v == p.eval(row.Q.u));
  }
}

TEST_CASE("weierstrass jacobian") {
  CHECK(pell_g1().jacobian().cubic() == curve_with_roots(r(-5, 3), r(-4, 3)).cubic());
  CHECK(pell_g1().jacobian().j_invariant() == jacobian_cubic(pell_g1().quartic()).j_invariant());
}

TEST_CASE("trivial points") {
  auto C = pell_g1();
  auto rows = C.trivial_points();
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].P.inf);
  CHECK(rows[1].P == QPoint::affine(0, 0));
  QCurve E = C.jacobian();
  const auto& x = C.P0();
  QPoint P5 = QPoint::affine(C.b() * C.d() * x[1] * x[1] / (x[0] * x[0]),
                             -C.b() * C.d() * x[1] * x[2] * x[3] / (x[0] * x[0] * x[0]));
  CHECK(E.on_curve(P5));
  // the sign changes acting as translations land in E[2]; the others give P4 + E[2]
  std::vector<QPoint> sums;
  for (auto& T : two_torsion(E)) {
    sums.push_back(T);
    sums.push_back(E.add(rows[4].P, T));
  }
  for (auto& row : rows) {
    CHECK(E.on_curve(row.P));
    CHECK(std::find(sums.begin(), sums.end(), row.P) != sums.end());
  }
  for (int i = 0; i < 4; ++i) CHECK(E.add(rows[i].P, rows[i].P).inf);
}

TEST_CASE("factorizations of the diagonal quartic") {
  auto C = pell_g1();
  auto fs = C.factorizations();
  auto ff = factorization_fields(C.quartic());
  for (auto& f : fs) {
    CHECK(f.plus * f.minus == to_lpoly(C.quartic()));
    CHECK(f.minus == conj(f.plus));
    bool listed = false;
    for (auto& g : ff) listed = listed || g.field == f.field;
    CHECK(listed);
  }
}

TEST_CASE("model enumeration") {
  auto pell = build_pell(1, 2);
  CHECK(pell.matrix[0] == std::vector<Rational>{8, -12, 4, 0, 0});
  CHECK(pell.matrix[1] == std::vector<Rational>{0, 12, -20, 8, 0});
  CHECK(pell.matrix[2] == std::vector<Rational>{0, 0, 16, -28, 12});
  auto C = DiagonalGenus5::from_matrix(pell.matrix, pell.point, Permutation::parse_cycles("(3 5)"));
  CHECK(C.R() == pell_rc());

  auto ed = build_edwards();
  auto D = DiagonalGenus5::from_matrix(ed.matrix, ed.point, Permutation::parse_cycles("(1 4)(2 5)"));
  QMatrix expect{{r(1, 5), r(4, 5)}, {r(7, 32), r(25, 32)}, {r(5, 32), r(27, 32)}};
  CHECK(D.R() == expect);

  auto models = models_enumerate(pell.matrix);
  CHECK(models.size() <= 10);
  for (auto& m : models) CHECK(m.R.size() == 3);

  QMatrix M{{1, 0, 0, 1, -2}, {0, 1, 0, r(2, 3), r(-5, 3)}, {0, 0, 1, r(-7, 3), r(4, 3)}};
  auto I = DiagonalGenus5::from_matrix(M, Coords(5, Rational(1)), Permutation::identity());
  CHECK(I.R() == pell_rc());
}

TEST_CASE("jacobian factors") {
  DiagonalGenus5 C(pell_rc(), Coords(5, Rational(1)));
  auto E = C.jacobian_factors();
  CHECK(E[4].cubic() == curve_with_roots(r(-5, 3), r(-4, 3)).cubic());
  // E4 as displayed is the Jacobian of the quartic on rows (a,b),(c,d)
  CHECK(E[4].j_invariant() == jacobian_cubic(C.p3()).j_invariant());
  CHECK(E[3].j_invariant() == jacobian_cubic(C.p4()).j_invariant());
  QMatrix swapped;
  for (auto& row : pell_rc()) swapped.push_back({row[1], row[0]});
  DiagonalGenus5 S(swapped, Coords(5, Rational(1)));
  std::multiset<Rational> j1, j2;
  for (auto& e : C.jacobian_factors()) j1.insert(e.j_invariant());
  for (auto& e : S.jacobian_factors()) j2.insert(e.j_invariant());
  CHECK(j1 == j2);
}

TEST_CASE("biquartic model and trivial images") {
  auto pell = build_pell(1, 2);
  auto C = DiagonalGenus5::from_matrix(pell.matrix, pell.point, Permutation::parse_cycles("(3 5)"));
  auto ts = C.trivial_t_values();
  CHECK(std::find(ts.begin(), ts.end(), TValue::infinity()) != ts.end());
  CHECK(std::find(ts.begin(), ts.end(), TValue::of(0)) != ts.end());
  auto bq = C.biquartic();
  for (auto& t : ts) {
    if (t.inf) continue;
    CHECK(is_square(bq.p1.eval(t.t)));
    CHECK(is_square(bq.p2.eval(t.t)));
  }
  for (auto& im : C.trivial_images()) {
    CHECK(C.on_curve(im.point));
    auto back = C.to_biquartic(im.point);
    CHECK(back.t == im.t);
  }
}

TEST_CASE("covering quotient membership") {
  auto pell = build_pell(1, 2);
  auto C = DiagonalGenus5::from_matrix(pell.matrix, pell.point, Permutation::parse_cycles("(3 5)"));
  auto cc = C.covering(1, 2);
  REQUIRE(cc.field);
  CHECK(cc.field->value() == 10);
  auto H = cc.quotient(1, 2, 1, -1);
  QuadElem v = H.f.eval(QuadElem(-1)) / QuadElem(2);
  auto z = sqrt_in_quadfield(v + QuadElem(0, 0, cc.field));
  REQUIRE(z);
  CHECK(H.contains(QuadElem(-1), *z));
  // (delta1 u^2, delta2 v^2) gives the same quotient up to z scaling
  auto H2 = cc.quotient(4, 18, 1, -1);
  Rational scale;
  auto Hc = H2.canonical(&scale);
  CHECK(Hc.delta == H.delta);
  CHECK(Hc.f == H.f);
  CHECK(H2.contains(QuadElem(-1), *z / QuadElem(scale)));
}

TEST_CASE("sign orbits") {
  Coords X{1, 3, 5, 7, 9};
  std::set<std::vector<Rational>> orbit;
  for (auto& g : SignGroupElement::all()) orbit.insert(g.apply(X));
  CHECK(orbit.size() == 32);
  auto n = orbit_normalize({{-1, 1, -1, 1, -1}, {1, -3, 5, -7, 9}, {1, 1, 1, 1, 1}});
  REQUIRE(n.size() == 2);
  CHECK(n[0] == Coords(5, Rational(1)));
  CHECK(n[1] == X);
  CHECK(std::is_sorted(n.begin(), n.end()));
}
