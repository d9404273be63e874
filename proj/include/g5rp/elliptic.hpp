#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "g5rp/poly.hpp"

namespace g5rp {

template <class F>
struct ECPoint {
  bool inf = true;
  F x{}, y{};
  static ECPoint infinity() { return ECPoint(); }
  static ECPoint affine(F x, F y) {
    ECPoint p;
    p.inf = false;
    p.x = std::move(x);
    p.y = std::move(y);
    return p;
  }
  friend bool operator==(const ECPoint& p, const ECPoint& q) {
    if (p.inf || q.inf) return p.inf == q.inf;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const ECPoint& p, const ECPoint& q) { return !(p == q); }
  std::string str() const { return inf ? std::string("O") : "(" + to_str(x) + ", " + to_str(y) + ")"; }
};

// y^2 = x^3 + a2 x^2 + a4 x + a6
template <class F>
class WeierstrassCurve {
 public:
  WeierstrassCurve(F a2, F a4, F a6) : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
    if (g5rp::is_zero(discriminant())) throw MathError("singular Weierstrass curve");
  }
  const F& a2() const { return a2_; }
  const F& a4() const { return a4_; }
  const F& a6() const { return a6_; }

  Poly<F> cubic() const { return Poly<F>({a6_, a4_, a2_, F(1)}); }
  F rhs(const F& x) const { return F(F(F(F(x + a2_) * x + a4_) * x) + a6_); }

  F discriminant() const { return F(F(16) * g5rp::discriminant(cubic())); }

  F j_invariant() const {
    F c4 = F(F(16) * F(F(a2_ * a2_) - F(F(3) * a4_)));
    return F(F(F(c4 * c4) * c4) / discriminant());
  }

  bool on_curve(const ECPoint<F>& P) const { return P.inf || F(P.y * P.y) == rhs(P.x); }

  ECPoint<F> neg(const ECPoint<F>& P) const {
    if (P.inf) return P;
    return ECPoint<F>::affine(P.x, F(-P.y));
  }

  ECPoint<F> add(const ECPoint<F>& P, const ECPoint<F>& Q) const {
    if (!on_curve(P) || !on_curve(Q)) throw MathError("point not on curve");
    if (P.inf) return Q;
    if (Q.inf) return P;
    F lam;
    if (P.x == Q.x) {
      if (g5rp::is_zero(F(P.y + Q.y))) return ECPoint<F>::infinity();
      lam = F(F(F(F(3) * P.x * P.x) + F(F(2) * a2_ * P.x) + a4_) / F(F(2) * P.y));
    } else {
      lam = F(F(Q.y - P.y) / F(Q.x - P.x));
    }
    F x3 = F(F(F(lam * lam) - a2_) - P.x - Q.x);
    F y3 = F(F(lam * F(P.x - x3)) - P.y);
    return ECPoint<F>::affine(x3, y3);
  }

  ECPoint<F> scalar_mul(long n, const ECPoint<F>& P) const {
    if (n < 0) return scalar_mul(-n, neg(P));
    ECPoint<F> R = ECPoint<F>::infinity(), B = P;
    while (n) {
      if (n & 1) R = add(R, B);
      B = add(B, B);
      n >>= 1;
    }
    return R;
  }

  std::string str() const {
    Poly<F> c = cubic();
    return "y^2 = " + c.str("x");
  }

 private:
  F a2_, a4_, a6_;
};

using QCurve = WeierstrassCurve<Rational>;
using QPoint = ECPoint<Rational>;

inline std::vector<QPoint> two_torsion(const QCurve& E) {
  std::vector<QPoint> out{QPoint::infinity()};
  auto roots = rational_roots(E.cubic());
  for (auto& r : roots) {
    QPoint P = QPoint::affine(r, Rational(0));
    if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
  }
  return out;
}

// y^2 = x (x + u)(x + v)
inline QCurve curve_with_roots(const Rational& u, const Rational& v) {
  return QCurve(Rational(u + v), Rational(u * v), Rational(0));
}

// Isomorphism between curves y^2 = cubic with a1 = a3 = 0: points of `from` are
// (u^2 x + r, u^3 y) for points (x, y) of `to`.
struct CurveIso {
  Rational u, r;
  QPoint to_target(const QPoint& P) const {
    if (P.inf) return P;
    return QPoint::affine(Rational((P.x - r) / (u * u)), Rational(P.y / (u * u * u)));
  }
  QPoint to_source(const QPoint& P) const {
    if (P.inf) return P;
    return QPoint::affine(Rational(u * u * P.x + r), Rational(u * u * u * P.y));
  }
};

inline bool iso_holds(const QCurve& from, const QCurve& to, const Rational& u2, const Rational& r) {
  // from(u2 x + r) == u2^3 to(x) coefficientwise
  QPoly lin({r, u2});
  QPoly lhs = from.cubic();
  QPoly comp;
  for (int i = lhs.degree(); i >= 0; --i) comp = comp * lin + QPoly::constant(lhs.coeff(i));
  return comp == to.cubic().scaled(Rational(u2 * u2 * u2));
}

// All rational isomorphisms found by matching 2-torsion roots (both curves need a rational root).
inline std::vector<CurveIso> isomorphisms(const QCurve& from, const QCurve& to) {
  std::vector<CurveIso> out;
  auto rf = rational_roots(from.cubic());
  auto rt = rational_roots(to.cubic());
  std::vector<std::pair<Rational, Rational>> cands;
  for (auto& x : rf)
    for (auto& y : rt) {
      for (auto& x2 : rf)
        for (auto& y2 : rt) {
          if (x2 == x || y2 == y) continue;
          Rational u2 = (x2 - x) / (y2 - y);
          cands.push_back({u2, Rational(x - u2 * y)});
        }
    }
  for (auto& [u2, r] : cands) {
    auto u = rational_sqrt(u2);
    if (!u || *u == 0) continue;
    if (!iso_holds(from, to, u2, r)) continue;
    for (int s : {1, -1}) {
      CurveIso iso{Rational(s * *u), r};
      bool dup = false;
      for (auto& o : out) dup = dup || (o.u == iso.u && o.r == iso.r);
      if (!dup) out.push_back(iso);
    }
  }
  return out;
}

}  // namespace g5rp
