#include "g5rp/diagonal1.hpp"

#include <algorithm>

namespace g5rp {

bool tvalue_less(const TValue& x, const TValue& y) {
  if (x.inf || y.inf) return x.inf && !y.inf;
  int c = cmp(x.t.get_den(), y.t.get_den());
  if (c != 0) return c < 0;
  return x.t.get_num() < y.t.get_num();
}

TValue parse_tvalue(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return TValue::infinity();
  return TValue::of(parse_rational(s));
}

Coords normalize_projective(const Coords& X) {
  Integer l = 1, g = 0;
  for (auto& v : X) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> n;
  for (auto& v : X) {
    n.push_back(v.get_num() * (l / v.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.back().get_mpz_t());
  }
  if (g == 0) throw MathError("zero projective point");
  int s = 0;
  for (auto& v : n)
    if (v != 0) {
      s = sgn(v);
      break;
    }
  Coords out;
  for (auto& v : n) out.push_back(Rational(Integer(v * s / g)));
  return out;
}

Coords orbit_representative(const Coords& X) {
  Coords n = normalize_projective(X);
  for (auto& v : n) v = abs(v);
  return n;
}

bool projective_equal(const Coords& X, const Coords& Y) {
  if (X.size() != Y.size()) return false;
  return normalize_projective(X) == normalize_projective(Y);
}

std::string coords_str(const Coords& X) {
  std::string s = "[";
  for (size_t i = 0; i < X.size(); ++i) s += (i ? ":" : "") + X[i].get_str();
  return s + "]";
}

DiagonalGenus1::DiagonalGenus1(Rational a, Rational b, Rational c, Rational d, std::array<Rational, 4> P0)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), x_(std::move(P0)) {
  if (a_ * d_ - b_ * c_ == 0) throw MathError("diagonal genus 1: ad - bc = 0");
  for (auto& v : x_)
    if (v == 0) throw MathError("diagonal genus 1: base point has a zero coordinate");
  if (!on_curve(x_)) throw MathError("diagonal genus 1: base point is not on the curve");
  if (a_ * b_ * c_ * d_ == 0) throw MathError("diagonal genus 1: singular Jacobian (a zero entry)");

  auto isos = isomorphisms(jacobian_cubic(quartic()), jacobian());
  if (isos.empty()) throw MathError("diagonal genus 1: no rational isomorphism to the Jacobian");

  std::vector<TrivialRow> raw;
  for (int m = 0; m < 8; ++m) {
    std::array<int, 4> sg{(m & 4) ? -1 : 1, (m & 2) ? -1 : 1, (m & 1) ? -1 : 1, 1};
    std::array<Rational, 4> X;
    for (int i = 0; i < 4; ++i) X[i] = sg[i] * x_[i];
    TrivialRow r;
    r.signs = sg;
    r.label = "[";
    for (int s : sg) r.label += s > 0 ? "+" : "-";
    r.label += "]";
    r.Q = to_quartic(X);
    raw.push_back(r);
  }
  Rational x4 = -a_ * b_ * x_[3] * x_[3] / (x_[2] * x_[2]);
  Rational y4 = a_ * b_ * (a_ * d_ - b_ * c_) * x_[0] * x_[1] * x_[3] / (x_[2] * x_[2] * x_[2]);
  QPoint printedP4 = QPoint::affine(x4, y4);
  int best = -1;
  for (size_t k = 0; k < isos.size(); ++k) {
    int score = 0;
    for (auto& r : raw) {
      if (r.Q.at_infinity || r.Q.u != 0) continue;
      QPoint P = isos[k].to_target(phi_affine(quartic(), r.Q.u, r.Q.v));
      if (r.Q.v == a_ * b_ * x_[3] * x_[3] * x_[3] * x_[3] && P == QPoint::affine(0, 0)) score += 2;
      if (P == printedP4) score += 1;
    }
    if (best < 0 || score > best) {
      best = score;
      iso_ = isos[k];
    }
  }
  for (auto& r : raw) r.P = to_jacobian(r.Q);

  QCurve E = jacobian();
  std::vector<QPoint> order{QPoint::infinity(), QPoint::affine(0, 0), QPoint::affine(Rational(-b_ * c_), 0),
                            QPoint::affine(Rational(-a_ * d_), 0)};
  std::vector<Rational> xs{x4, Rational(b_ * d_ * x_[1] * x_[1] / (x_[0] * x_[0])),
                           Rational(a_ * c_ * x_[0] * x_[0] / (x_[1] * x_[1])),
                           Rational(-c_ * d_ * x_[2] * x_[2] / (x_[3] * x_[3]))};
  std::vector<bool> used(raw.size(), false);
  for (auto& target : order)
    for (size_t k = 0; k < raw.size(); ++k)
      if (!used[k] && raw[k].P == target) {
        used[k] = true;
        rows_.push_back(raw[k]);
        break;
      }
  for (auto& xv : xs)
    for (size_t k = 0; k < raw.size(); ++k)
      if (!used[k] && !raw[k].P.inf && raw[k].P.x == xv) {
        used[k] = true;
        rows_.push_back(raw[k]);
        break;
      }
  for (size_t k = 0; k < raw.size(); ++k)
    if (!used[k]) rows_.push_back(raw[k]);
}

bool DiagonalGenus1::on_curve(const std::array<Rational, 4>& X) const {
  return a_ * X[0] * X[0] + b_ * X[1] * X[1] == X[2] * X[2] && c_ * X[0] * X[0] + d_ * X[1] * X[1] == X[3] * X[3];
}

std::array<QPoly, 3> DiagonalGenus1::conic_polys() const {
  const auto& x = x_;
  Rational x3sq = x[3] * x[3], x3q = x3sq * x3sq;
  QPoly X0({Rational(-a_ * b_ * x[0] * x3q), Rational(-2 * b_ * x[1] * x3sq), x[0]});
  QPoly X1({Rational(a_ * b_ * x[1] * x3q), Rational(-2 * a_ * x[0] * x3sq), Rational(-x[1])});
  QPoly X2({Rational(x[2] * a_ * b_ * x3q), Rational(0), x[2]});
  return {X0, X1, X2};
}

std::array<Rational, 3> DiagonalGenus1::forward(const TValue& t) const {
  if (t.inf) return {x_[0], Rational(-x_[1]), x_[2]};
  auto P = conic_polys();
  return {P[0].eval(t.t), P[1].eval(t.t), P[2].eval(t.t)};
}

TValue DiagonalGenus1::base_parameter() const {
  return TValue::of(Rational(-a_ * x_[0] * x_[3] * x_[3] / x_[1]));
}

TValue DiagonalGenus1::inverse(const std::array<Rational, 3>& X) const {
  Rational num = b_ * (x_[1] * X[2] - X[1] * x_[2]) * x_[3] * x_[3];
  Rational den = x_[0] * X[2] - X[0] * x_[2];
  if (den != 0) return TValue::of(Rational(num / den));
  if (num != 0) return TValue::infinity();
  if (X[0] == 0 && X[1] == 0 && X[2] == 0) throw MathError("conic inverse: zero point");
  return base_parameter();
}

QPoly DiagonalGenus1::quartic() const {
  const auto& x = x_;
  Rational D = a_ * d_ - b_ * c_;
  Rational x3sq = x[3] * x[3], x3q = x3sq * x3sq;
  return QPoly({Rational(a_ * a_ * b_ * b_ * x3q * x3q), Rational(-4 * a_ * b_ * D * x[0] * x[1] * x3q),
                Rational(2 * (2 * (a_ * a_ * d_ * x[0] * x[0] + b_ * b_ * c_ * x[1] * x[1]) - a_ * b_ * x3sq) * x3sq),
                Rational(4 * D * x[0] * x[1]), Rational(1)});
}

QuarticPoint DiagonalGenus1::to_quartic(const std::array<Rational, 4>& X) const {
  if (!on_curve(X)) throw MathError("point not on the diagonal genus 1 curve");
  TValue t = inverse({X[0], X[1], X[2]});
  auto F = forward(t);
  Rational lam;
  for (int i : {2, 0, 1})
    if (X[i] != 0) {
      lam = F[i] / X[i];
      break;
    }
  QuarticPoint Q;
  if (t.inf) {
    Q.at_infinity = true;
    Rational s = X[3] * lam / x_[3];
    Q.sign = s > 0 ? 1 : -1;
    return Q;
  }
  Q.u = t.t;
  Q.v = lam * X[3] / x_[3];
  return Q;
}

std::array<Rational, 4> DiagonalGenus1::from_quartic(const TValue& t, const Rational& y) const {
  auto F = forward(t);
  return {F[0], F[1], F[2], Rational(y * x_[3])};
}

QCurve DiagonalGenus1::jacobian() const { return curve_with_roots(Rational(a_ * d_), Rational(b_ * c_)); }

CurveIso DiagonalGenus1::quartic_to_jacobian_iso() const { return iso_; }

QPoint DiagonalGenus1::to_jacobian(const QuarticPoint& Q) const {
  QPoint J = Q.at_infinity ? phi_infinity(quartic(), Q.sign) : phi_affine(quartic(), Q.u, Q.v);
  return iso_.to_target(J);
}

std::vector<TrivialRow> DiagonalGenus1::trivial_points() const { return rows_; }

std::array<Diag1Factorization, 3> DiagonalGenus1::factorizations() const {
  const auto& x = x_;
  Rational D = a_ * d_ - b_ * c_;
  Rational x3sq = x[3] * x[3], x3q = x3sq * x3sq;
  std::array<Diag1Factorization, 3> out;
  std::array<Rational, 3> asq{Rational(-c_ * d_), Rational(-c_ * D), Rational(d_ * D)};
  std::array<QPoint, 3> tors{QPoint::affine(0, 0), QPoint::affine(Rational(-b_ * c_), 0),
                             QPoint::affine(Rational(-a_ * d_), 0)};
  for (int i = 0; i < 3; ++i) {
    if (asq[i] == 0) throw MathError("diagonal genus 1: degenerate factorization (alpha = 0)");
    auto& f = out[i];
    f.index = i + 1;
    f.alpha_sq = asq[i];
    f.alpha = sqrt_as_quad(asq[i]);
    f.field = f.alpha.field();
    f.torsion = tors[i];
    auto make = [&](const QuadElem& al) {
      QuadElem one(1);
      if (i == 0)
        return LPoly({QuadElem(Rational(-a_ * b_ * x3q)),
                      QuadElem(Rational(2 * D * x[0] * x[1])) - QuadElem(Rational(2 * x[2] * x[2])) * al, one});
      if (i == 1)
        return LPoly({QuadElem(Rational(b_ * x3sq)) *
                          (QuadElem(Rational(2 * c_ * x[2] * x[2] - a_ * x3sq)) + QuadElem(Rational(2 * x[1] * x[2])) * al),
                      QuadElem(Rational(2 * x[0] * D * x[1])) - QuadElem(Rational(2 * x[0] * x[2])) * al, one});
      return LPoly({QuadElem(Rational(a_ * x3sq)) *
                        (QuadElem(Rational(b_ * d_ * x[1] * x[1] + (2 * a_ * d_ - b_ * c_) * x[0] * x[0])) -
                         QuadElem(Rational(2 * x[0] * x[2])) * al),
                    QuadElem(Rational(2 * x[1] * D * x[0])) - QuadElem(Rational(2 * x[1] * x[2])) * al, one});
    };
    f.plus = make(f.alpha);
    f.minus = make(-f.alpha);
    if (f.plus * f.minus != to_lpoly(quartic())) throw MathError("diagonal genus 1: factorization identity failed");
  }
  return out;
}

}  // namespace g5rp
