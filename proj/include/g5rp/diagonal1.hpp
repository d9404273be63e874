#pragma once

#include <array>
#include <string>
#include <vector>

#include "g5rp/quartic.hpp"

namespace g5rp {

// A point of P^1(Q).
struct TValue {
  bool inf = false;
  Rational t;
  static TValue infinity() { return {true, Rational(0)}; }
  static TValue of(const Rational& v) { return {false, v}; }
  std::string str() const { return inf ? std::string("inf") : t.get_str(); }
  friend bool operator==(const TValue& x, const TValue& y) { return x.inf == y.inf && (x.inf || x.t == y.t); }
  friend bool operator!=(const TValue& x, const TValue& y) { return !(x == y); }
};
// Order by height box position: (denominator, numerator), infinity first.
bool tvalue_less(const TValue& x, const TValue& y);
TValue parse_tvalue(const std::string& s);

using Coords = std::vector<Rational>;

// Scale to coprime integers with the first nonzero coordinate positive.
Coords normalize_projective(const Coords& X);
// Absolute values, coprime integers.
Coords orbit_representative(const Coords& X);
bool projective_equal(const Coords& X, const Coords& Y);
std::string coords_str(const Coords& X);

struct Diag1Factorization {
  int index;  // 1, 2, 3 in the order (0,0), (-bc,0), (-ad,0)
  Rational alpha_sq;
  QuadElem alpha;
  FieldId field;
  LPoly plus, minus;
  QPoint torsion;
};

struct TrivialRow {
  std::array<int, 4> signs;
  std::string label;
  QuarticPoint Q;
  QPoint P;
};

// aX0^2 + bX1^2 = X2^2, cX0^2 + dX1^2 = X3^2 with a rational point P0.
class DiagonalGenus1 {
 public:
  DiagonalGenus1(Rational a, Rational b, Rational c, Rational d, std::array<Rational, 4> P0);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  const std::array<Rational, 4>& P0() const { return x_; }

  bool on_curve(const std::array<Rational, 4>& X) const;

  // Parametrization of the first conic through P0.
  std::array<QPoly, 3> conic_polys() const;
  std::array<Rational, 3> forward(const TValue& t) const;
  TValue inverse(const std::array<Rational, 3>& X) const;
  TValue base_parameter() const;

  QPoly quartic() const;
  // The point of y^2 = quartic(t) corresponding to a point of the curve.
  QuarticPoint to_quartic(const std::array<Rational, 4>& X) const;
  std::array<Rational, 4> from_quartic(const TValue& t, const Rational& y) const;

  QCurve jacobian() const;
  CurveIso quartic_to_jacobian_iso() const;
  QPoint to_jacobian(const QuarticPoint& Q) const;

  std::vector<TrivialRow> trivial_points() const;
  std::array<Diag1Factorization, 3> factorizations() const;

 private:
  Rational a_, b_, c_, d_;
  std::array<Rational, 4> x_;
  CurveIso iso_;
  std::vector<TrivialRow> rows_;
};

}  // namespace g5rp
