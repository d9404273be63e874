#pragma once

#include <array>
#include <string>
#include <vector>

#include "g5rp/diagonal1.hpp"

namespace g5rp {

using QMatrix = std::vector<std::vector<Rational>>;

// A permutation of the five columns; image[i] = s(i), 0-based.
struct Permutation {
  std::array<int, 5> image{0, 1, 2, 3, 4};
  static Permutation identity() { return {}; }
  // "(3 5)", "(1 4)(2 5)", "()" ; 1-based points.
  static Permutation parse_cycles(const std::string& s);
  static Permutation from_order(const std::array<int, 5>& order);
  Permutation inverse() const;
  // Column order fed to echelon reduction: order[i] = s^{-1}(i).
  std::array<int, 5> order() const { return inverse().image; }
  std::string cycles() const;
  friend bool operator==(const Permutation& x, const Permutation& y) { return x.image == y.image; }
};

struct ModelChoice {
  int index = 0;  // 1..10
  Permutation perm;
  QMatrix R;  // 3x2
};

// Echelon form of M with columns taken in `order`; empty when the first three columns are not pivots.
QMatrix reduced_matrix(const QMatrix& M, const std::array<int, 5>& order);
// The ten models, lexicographic on the pair of non-pivot columns.
std::vector<ModelChoice> models_enumerate(const QMatrix& M);

struct SignGroupElement {
  std::array<int, 5> eps{1, 1, 1, 1, 1};
  friend SignGroupElement operator*(const SignGroupElement& x, const SignGroupElement& y) {
    SignGroupElement r;
    for (int i = 0; i < 5; ++i) r.eps[i] = x.eps[i] * y.eps[i];
    return r;
  }
  friend bool operator==(const SignGroupElement& x, const SignGroupElement& y) { return x.eps == y.eps; }
  Coords apply(const Coords& X) const;
  static std::vector<SignGroupElement> all();
};

// One representative per sign orbit (absolute values, coprime integers), sorted and deduplicated.
std::vector<Coords> orbit_normalize(const std::vector<Coords>& points);

struct BiquarticModel {
  QPoly p1, p2;
  std::string provenance;
  // Throws unless both are monic, separable and coprime.
  void validate() const;
};

// Factorization attached to the paper-style index j of one of the two quartics.
struct BiquarticFactor {
  int which = 3;         // 3 or 4
  int j = 1;             // paper index 1..3
  int appendix = 1;      // index into DiagonalGenus1::factorizations (1-based)
  Rational alpha_sq;
  FieldId field;
  LPoly plus, minus;     // monic in the shared parameter t
  Rational u, v;         // Jac(y^2 = p_which) is y^2 = x(x+u)(x+v)
  QPoint torsion;        // the 2-torsion point on it
  QCurve jacobian() const { return curve_with_roots(u, v); }
};

// Paper index j -> appendix index (1 -> (0,0), 2 -> (-ad,0), 3 -> (-bc,0)).
int appendix_index(int paper_j);

struct BiquarticPoint {
  TValue t;
  Rational y3, y4;  // at t = inf: the values of y/t^2
};

struct HQuotient {
  Rational delta;
  int s3 = 1, s4 = 1;
  FieldId field;
  LPoly f;  // p_{3,s3} * p_{4,s4}
  std::string signs() const { return std::string(s3 > 0 ? "+" : "-") + (s4 > 0 ? "+" : "-"); }
  // Same curve with delta replaced by its squarefree part; z scales by `z_scale`.
  HQuotient canonical(Rational* z_scale = nullptr) const;
  bool contains(const QuadElem& t, const QuadElem& z) const;
};

struct CoveringCase {
  int j3 = 1, j4 = 1;
  FieldId field;
  BiquarticFactor f3, f4;
  HQuotient quotient(const Rational& delta1, const Rational& delta2, int s3, int s4) const;
  // D^(d1,d2) -> C on the biquartic model: (t, y3, y4) = (t, d1 y3+ y3-, d2 y4+ y4-).
  std::pair<QuadElem, QuadElem> chi(const Rational& d1, const Rational& d2, const QuadElem& y3p, const QuadElem& y3m,
                                    const QuadElem& y4p, const QuadElem& y4m) const;
  // D^(d1,d2) -> H^{d1 d2}_s : z = y3s * y4s.
  QuadElem pushforward(const QuadElem& y3s, const QuadElem& y4s) const { return y3s * y4s; }
};

// aX0^2 + bX1^2 = X2^2, cX0^2 + dX1^2 = X3^2, eX0^2 + fX1^2 = X4^2.
class DiagonalGenus5 {
 public:
  DiagonalGenus5(QMatrix R, Coords P0);
  // M given on original columns; P0 in original coordinates.
  static DiagonalGenus5 from_matrix(const QMatrix& M, const Coords& P0, const Permutation& perm);

  const QMatrix& R() const { return R_; }
  const Rational& a() const { return R_[0][0]; }
  const Rational& b() const { return R_[0][1]; }
  const Rational& c() const { return R_[1][0]; }
  const Rational& d() const { return R_[1][1]; }
  const Rational& e() const { return R_[2][0]; }
  const Rational& f() const { return R_[2][1]; }
  const Coords& P0() const { return P0_; }
  const QMatrix& original_matrix() const { return M_; }
  const Permutation& permutation() const { return perm_; }

  Coords to_original(const Coords& model) const;
  Coords from_original(const Coords& original) const;
  bool on_curve(const Coords& X) const;
  bool on_original(const Coords& X) const;

  // E0..E4 as displayed: E4 = x(x+ad)(x+cb), E3 = x(x+af)(x+eb), E2 = x(x+cf)(x+ed),
  // E1 = x(x-d(af-eb))(x-f(ad-cb)), E0 = x(x+c(af-eb))(x+e(ad-cb)).
  std::array<QCurve, 5> jacobian_factors() const;

  const DiagonalGenus1& g3() const { return g3_; }
  const DiagonalGenus1& g4() const { return g4_; }

  BiquarticModel biquartic() const;
  QPoly p3() const { return g3_.quartic(); }
  QPoly p4() const;
  BiquarticPoint to_biquartic(const Coords& X) const;
  // Model point over t with X3, X4 >= 0, if rational.
  std::optional<Coords> from_biquartic(const TValue& t) const;

  struct TrivialImage {
    SignGroupElement sign;
    Coords point;
    TValue t;
  };
  std::vector<TrivialImage> trivial_images() const;
  std::vector<TValue> trivial_t_values() const;

  BiquarticFactor factor3(int j) const;
  BiquarticFactor factor4(int j) const;
  // Throws when Q(alpha3, alpha4) has degree 4.
  CoveringCase covering(int j3, int j4) const;
  // First (j3, j4) in lexicographic order with [L:Q] <= 2.
  std::optional<std::pair<int, int>> default_indices() const;

 private:
  QMatrix R_, M_;
  Permutation perm_;
  Coords P0_;
  DiagonalGenus1 g3_, g4_;
};

// Composite of two quadratic (or trivial) fields if it has degree <= 2.
std::optional<FieldId> composite_field(const FieldId& x, const FieldId& y);

}  // namespace g5rp
