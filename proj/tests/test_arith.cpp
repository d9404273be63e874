#include "doctest.h"
#include "g5rp/elliptic.hpp"
#include "oracles.hpp"

using namespace g5rp;

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(Rational(672)) == 42);
  CHECK(squarefree_part(Rational(1)) == 1);
  CHECK(squarefree_part(Rational(-50)) == -2);
  // independent: 672 / 42 is a perfect square and trial division agrees
  CHECK(exact_sqrt(Integer(672 / 42)).has_value());
  for (long n : {672L, -50L, 360L, -7L, 98L, 1L, 4096L})
    CHECK(squarefree_part(Rational(n)) == oracle::squarefree_brute(n));
  CHECK(squarefree_part(Rational(3, 8)) == 6);
}

TEST_CASE("sqrt in quadratic fields") {
  SquarefreeDisc two(2), ten(10), five(5);
  auto r = sqrt_in_quadfield(QuadElem(3, 2, two));
  REQUIRE(r);
  CHECK(*r * *r == QuadElem(3, 2, two));
  CHECK((*r == QuadElem(1, 1, two) || *r == QuadElem(-1, -1, two)));

  auto s = sqrt_in_quadfield(QuadElem(10, 0, ten));
  REQUIRE(s);
  CHECK(s->a() == 0);
  CHECK(abs(s->b()) == 1);

  // 2 and 2/5 are non-squares in Q
  CHECK(!rational_sqrt(Rational(2)));
  CHECK(!rational_sqrt(Rational(2, 5)));
  CHECK(!sqrt_in_quadfield(QuadElem(2, 0, five)));
}

TEST_CASE("square classes in L") {
  CHECK(!square_class_in_L(10, SquarefreeDisc(10)));
  CHECK(square_class_in_L(2, SquarefreeDisc(10)) == Integer(2));
  CHECK(!square_class_in_L(-15, SquarefreeDisc(-15)));
  CHECK(reduce_class(5, SquarefreeDisc(10)) == 2);
  CHECK(reduce_class(6, std::nullopt) == 6);
}

TEST_CASE("quadratic field arithmetic") {
  SquarefreeDisc d(7);
  QuadElem x(3, 1, d), y(Rational(1, 2), -2, d);
  CHECK(x * x.inverse() == QuadElem(1));
  CHECK(x.norm() == 2);
  CHECK((x * y).norm() == x.norm() * y.norm());
  CHECK((x + y).trace() == x.trace() + y.trace());
  CHECK_THROWS_AS(QuadElem(1, 1, SquarefreeDisc(2)) * QuadElem(1, 1, SquarefreeDisc(3)), MathError);
}

TEST_CASE("factorization and primes") {
  auto f = factor_integer(Integer(672));
  REQUIRE(f.size() == 3);
  CHECK(f[0].p == 2);
  CHECK(f[0].e == 5);
  CHECK(is_prime(Integer(97)));
  CHECK(!is_prime(Integer(91)));
  CHECK(valuation(Rational(3, 8), Integer(2)) == -3);
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(3, 7) == -1);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("polynomial arithmetic") {
  QPoly q({6, 0, -5, 0, 1});
  CHECK(q.eval(Rational(1)) == 2);
  CHECK(gcd(QPoly({-1, 0, 1}), QPoly({1, -2, 1})) == QPoly({-1, 1}));
  CHECK(QPoly({0, 0, 0, 0, 1}).derivative() == QPoly({0, 0, 0, 4}));
  auto [quo, rem] = divrem(q, QPoly({-2, 0, 1}));
  CHECK(rem.is_zero());
  CHECK(quo == QPoly({-3, 0, 1}));
}

TEST_CASE("discriminants") {
  CHECK(discriminant(QPoly({6, -5, 1})) == 1);
  // t^2 + a t + (b - beta) with a = 0, b = -5, beta = -5
  CHECK(discriminant(QPoly({0, 0, 1})) == 0);
  // quartic with roots +-sqrt2, +-sqrt3: product of squared root differences
  // (2sqrt2)^2 (2sqrt3)^2 ((sqrt2-sqrt3)(sqrt2+sqrt3))^4 = 8 * 12 * 1
  CHECK(discriminant(QPoly({6, 0, -5, 0, 1})) == 96);
}

TEST_CASE("rational roots") {
  auto r = rational_roots(QPoly({-4224, 784, 64, 1}));
  std::sort(r.begin(), r.end());
  REQUIRE(r.size() == 3);
  CHECK(r[0] == -44);
  CHECK(r[1] == -24);
  CHECK(r[2] == 4);
  for (auto& x : r) CHECK(QPoly({-4224, 784, 64, 1}).eval(x) == 0);
  auto s = rational_roots(QPoly({-120, -24, 5, 1}));
  REQUIRE(s.size() == 1);
  CHECK(s[0] == -5);
  CHECK(rational_roots(QPoly({1, 0, 1})).empty());
}

TEST_CASE("separability") {
  CHECK(is_separable(QPoly({6, 0, -5, 0, 1})));
  CHECK(!is_separable(QPoly({0, 0, 1}) * QPoly({1, -2, 1})));
  CHECK(is_separable(oracle::poly_from_roots({1, 2, 3, 4})));
}

TEST_CASE("elliptic curve arithmetic") {
  QCurve E = curve_with_roots(-6, 18);  // z^2 = w(w-6)(w+18)
  QPoint P = QPoint::affine(-2, 16);
  CHECK(E.on_curve(P));
  CHECK(E.add(P, QPoint::infinity()) == P);
  CHECK(E.add(P, E.neg(P)).inf);
  QPoint P2 = E.add(P, P);
  CHECK(E.on_curve(P2));
  CHECK(E.scalar_mul(3, P) == E.add(P2, P));
  CHECK(E.add(E.add(P, P2), P2) == E.add(P, E.add(P2, P2)));

  QCurve F = curve_with_roots(2, 3);
  CHECK(F.add(QPoint::affine(0, 0), QPoint::affine(0, 0)).inf);
  CHECK(two_torsion(F).size() == 4);
  CHECK(two_torsion(QCurve(0, 0, 1)).size() == 2);
  CHECK(two_torsion(QCurve(1, 1, 0)).size() == 2);
  CHECK_THROWS_AS(QCurve(0, 0, 0), MathError);
}

TEST_CASE("j-invariants") {
  CHECK(QCurve(0, 1, 0).j_invariant() == 1728);
  CHECK(QCurve(0, 0, 1).j_invariant() == 0);
}
