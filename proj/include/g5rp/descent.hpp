#pragma once

#include <string>
#include <vector>

#include "g5rp/elliptic.hpp"

namespace g5rp {

// y^2 = x(x^2 + A x + B) with the kernel point at (0,0).
struct IsogenyDescentProblem {
  Rational A, B;
  IsogenyDescentProblem(Rational a, Rational b);
  // Move the 2-torsion point with x = xT of E to the origin.
  static IsogenyDescentProblem at_torsion(const QCurve& E, const Rational& xT);
  Rational A_dual() const { return -2 * A; }
  Rational B_dual() const { return A * A - 4 * B; }
  // Integral model y^2 = x(x^2 + A' x + B') with A' = A u^2, B' = B u^4; same square classes.
  std::pair<Integer, Integer> integral_model() const;
};

// Square classes as signed squarefree integers, sorted by class_less.
using SelmerSet = std::vector<Integer>;

struct SelmerReport {
  SelmerSet set;
  SelmerSet candidates;
  std::vector<Integer> primes;
  std::vector<std::string> diagnostics;  // closure failures and the like
};

SelmerReport isogeny_selmer_report(const IsogenyDescentProblem& P, long prime_bound = 0);
SelmerSet isogeny_selmer(const IsogenyDescentProblem& P, long prime_bound = 0);

// x-coordinate descent map on the shifted curve (O -> 1, (0,0) -> B), as a squarefree integer.
Integer descent_image(const IsogenyDescentProblem& P, const QPoint& shifted);

SelmerSet image_in_L(const SelmerSet& S, const FieldId& L);
SelmerSet subgroup_generated(const SelmerSet& gens, const FieldId& L);
// Coset representatives of S modulo the subgroup generated by `trivial`; first of each coset in class order.
SelmerSet quotient_by_trivial(const SelmerSet& S, const SelmerSet& trivial, const FieldId& L);
SelmerSet twist_products(const SelmerSet& S3, const SelmerSet& S4, const FieldId& L);
bool is_closed(const SelmerSet& S, const FieldId& L);

std::string set_str(const SelmerSet& S);

}  // namespace g5rp
