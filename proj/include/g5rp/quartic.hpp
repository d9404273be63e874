#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g5rp/elliptic.hpp"

namespace g5rp {

// y^2 = q(t), q monic separable of degree 4 (q = t^4 + a t^3 + b t^2 + c t + d).
struct QuarticModel {
  QPoly q;
  explicit QuarticModel(QPoly poly);
  Rational a() const { return q.coeff(3); }
  Rational b() const { return q.coeff(2); }
  Rational c() const { return q.coeff(1); }
  Rational d() const { return q.coeff(0); }
};

// A quartic with leading coefficient s^2 becomes monic via t' = s t, y' = s y:
// monic(t') = s^2 p(t'/s).
struct Monicized {
  QPoly monic;
  Rational scale;
};
Monicized monicize(const QPoly& p);

QPoly cubic_resolvent(const QPoly& q);
QCurve jacobian_cubic(const QPoly& q);

// sqrt of a rational inside Q or Q(sqrt(squarefree_part)).
QuadElem sqrt_as_quad(const Rational& x);

struct QuarticFactorization {
  Rational beta;
  FieldId field;
  LPoly p1, p2;
  bool delta2_zero = false;
  Rational Delta1, Delta2;
  QuadElem root;  // gamma (gamma^2 = Delta2) or, on the Delta2 = 0 branch, delta (delta^2 = Delta1)
};

QuarticFactorization factor_over_quadratic(const QPoly& q, const Rational& beta);

struct FactorizationField {
  Rational beta;
  FieldId field;
};
std::vector<FactorizationField> factorization_fields(const QPoly& q);

// The classical map F: v^2 = q(u) -> E: y^2 = -r(-x), with [1:1:0] -> O.
QPoint phi_affine(const QPoly& q, const Rational& u, const Rational& v);
QPoint phi_infinity(const QPoly& q, int sign);

struct QuarticPoint {
  bool at_infinity = false;
  int sign = 1;  // for [1:sign:0]
  Rational u, v;
  std::string str() const;
  friend bool operator==(const QuarticPoint& x, const QuarticPoint& y) {
    if (x.at_infinity != y.at_infinity) return false;
    return x.at_infinity ? x.sign == y.sign : (x.u == y.u && x.v == y.v);
  }
};

struct PhiSpecialValues {
  explicit PhiSpecialValues(QCurve curve) : E(std::move(curve)) {}
  std::array<Rational, 4> roots;
  std::array<Rational, 3> delta;  // delta_2, delta_3, delta_4
  std::array<Rational, 3> gamma;
  int special = 0;  // index i in 2..4 with gamma_i = 0, or 0 for the generic branch
  QCurve E;
  QPoint at_plus, at_minus;
  std::array<QPoint, 4> at_roots;
  std::array<QuarticPoint, 3> inverse;  // images of (-delta_i, 0)
  bool matches_map = false;              // every value agrees with phi_affine / phi_infinity
};

PhiSpecialValues phi_special_values(const std::array<Rational, 4>& roots);

struct ShiftReport {
  explicit ShiftReport(QCurve curve) : W(std::move(curve)) {}
  QCurve W;
  Rational A, B;
  Rational minus_B_over_y;
  Rational gamma_sq;      // gamma_i^2, or (alpha_i-alpha_j)^2(alpha_i-alpha_k)^2 on the special branch
  Rational disc_value;    // disc(t^2 + a t + (b - delta_i)), or disc(t^2 - delta_i t + d)
  bool special = false;
  bool holds = false;
};

ShiftReport shift_two_torsion(const std::array<Rational, 4>& roots, int i);

class TwoCover {
 public:
  TwoCover(const QuarticFactorization& fac, const QuadElem& delta);
  const QuadElem& delta() const { return delta_; }
  const QuarticFactorization& factorization() const { return fac_; }
  bool contains(const QuadElem& t, const QuadElem& y1, const QuadElem& y2) const;
  // (t, y1, y2) -> (t, delta y1 y2)
  std::pair<QuadElem, QuadElem> pushforward(const QuadElem& t, const QuadElem& y1, const QuadElem& y2) const;

 private:
  QuarticFactorization fac_;
  QuadElem delta_;
};

TwoCover two_cover(const QPoly& q, const Rational& beta, const QuadElem& delta);

}  // namespace g5rp
