#include "doctest.h"
#include "g5rp/descent.hpp"

using namespace g5rp;

namespace {
SelmerSet S(std::initializer_list<long> v) {
  SelmerSet s;
  for (long x : v) s.push_back(x);
  std::sort(s.begin(), s.end(), class_less);
  return s;
}
}  // namespace

TEST_CASE("isogeny descent problem") {
  auto P = IsogenyDescentProblem::at_torsion(curve_with_roots(2, 3), 0);
  CHECK(P.A == 5);
  CHECK(P.B == 6);
  CHECK(P.A_dual() == -10);
  CHECK(P.B_dual() == 1);
  auto sel = isogeny_selmer(P);
  CHECK(std::find(sel.begin(), sel.end(), Integer(1)) != sel.end());
  CHECK(std::find(sel.begin(), sel.end(), Integer(6)) != sel.end());  // image of (0,0)
  CHECK(is_closed(sel, std::nullopt));
  CHECK_THROWS(IsogenyDescentProblem(1, 0));
  CHECK_THROWS(IsogenyDescentProblem(2, 1));
}

TEST_CASE("descent image") {
  IsogenyDescentProblem P(5, 6);
  CHECK(descent_image(P, QPoint::infinity()) == 1);
  CHECK(descent_image(P, QPoint::affine(0, 0)) == 6);
  CHECK(descent_image(P, QPoint::affine(-2, 0)) == -2);
}

TEST_CASE("image in L") {
  CHECK(image_in_L(S({1, 10, 2, 5}), SquarefreeDisc(10)) == S({1, 2}));
  CHECK(image_in_L(S({1}), SquarefreeDisc(7)) == S({1}));
  CHECK(image_in_L(S({1, -1}), SquarefreeDisc(-15)) == S({1, -1}));
}

TEST_CASE("quotient by trivial images") {
  auto full = S({1, -1, 2, -2, 3, -3, 6, -6});
  CHECK(quotient_by_trivial(full, S({1}), std::nullopt) == full);
  CHECK(quotient_by_trivial(full, S({1, -1}), std::nullopt) == S({1, 2, 3, 6}));
  CHECK(subgroup_generated(S({2, 3}), std::nullopt) == S({1, 2, 3, 6}));
}

TEST_CASE("twist products") {
  CHECK(twist_products(S({1}), S({1}), std::nullopt) == S({1}));
  CHECK(twist_products(S({1, 2}), S({1, 3}), std::nullopt) == S({1, 2, 3, 6}));
  CHECK(set_str(S({1, -1, 2})) == "{1, -1, 2}");
}
