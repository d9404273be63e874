#include "g5rp/quartic.hpp"

#include <algorithm>

namespace g5rp {

QuarticModel::QuarticModel(QPoly poly) : q(std::move(poly)) {
  if (q.degree() != 4 || q.lead() != 1) throw MathError("quartic model must be monic of degree 4");
  if (discriminant(q) == 0) throw MathError("quartic model is not separable");
}

Monicized monicize(const QPoly& p) {
  if (p.degree() != 4) throw MathError("monicize: degree must be 4");
  auto s = rational_sqrt(p.lead());
  if (!s) throw MathError("monicize: leading coefficient is not a square");
  std::vector<Rational> c(5);
  for (int k = 0; k <= 4; ++k) {
    Rational f = 1;
    for (int e = k; e < 2; ++e) f *= *s;
    for (int e = 2; e < k; ++e) f /= *s;
    c[k] = p.coeff(k) * f;
  }
  return {QPoly(c), *s};
}

QPoly cubic_resolvent(const QPoly& q) {
  Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1), d = q.coeff(0);
  return QPoly({Rational(-a * a * d + 4 * b * d - c * c), Rational(a * c - 4 * d), Rational(-b), Rational(1)});
}

QCurve jacobian_cubic(const QPoly& q) {
  Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1), d = q.coeff(0);
  return QCurve(b, Rational(a * c - 4 * d), Rational(a * a * d - 4 * b * d + c * c));
}

QuadElem sqrt_as_quad(const Rational& x) {
  if (x == 0) return QuadElem(0);
  if (auto r = rational_sqrt(x)) return QuadElem(*r);
  SquarefreeDisc D = SquarefreeDisc::of_rational(x);
  auto r = rational_sqrt(Rational(x / Rational(D.value())));
  return QuadElem(0, *r, D);
}

QuarticFactorization factor_over_quadratic(const QPoly& q, const Rational& beta) {
  if (q.degree() != 4 || q.lead() != 1) throw MathError("factor_over_quadratic: q must be monic quartic");
  if (cubic_resolvent(q).eval(beta) != 0) throw MathError("beta is not a root of the cubic resolvent");
  Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1), d = q.coeff(0);
  QuarticFactorization f;
  f.beta = beta;
  f.Delta1 = beta * beta - 4 * d;
  f.Delta2 = 4 * beta + a * a - 4 * b;
  if (f.Delta2 != 0) {
    QuadElem g = sqrt_as_quad(f.Delta2);
    f.root = g;
    f.field = g.field();
    Rational den = a * a * a - 4 * a * b + 8 * c;
    auto sum = [&](const QuadElem& x) { return QuadElem((x - QuadElem(a)) / QuadElem(2)); };
    auto prod = [&](const QuadElem& x) {
      if (den != 0) {
        QuadElem x2 = x * x, x3 = x2 * x, x5 = x3 * x2;
        Rational k1 = 2 * (a * a * a * a - 6 * a * a * b + 8 * b * b + 4 * a * c - 32 * d) / den;
        Rational k3 = -(3 * a * a - 8 * b) / den;
        QuadElem s = QuadElem(Rational(4 * b - a * a)) + QuadElem(k1) * x + x2 + QuadElem(k3) * x3 + x5 / QuadElem(den);
        return QuadElem(s / QuadElem(8));
      }
      // alpha1 alpha2 from the linear relations when the rational denominator vanishes
      return QuadElem((QuadElem(c) + QuadElem(beta) * sum(x)) / x);
    };
    f.p1 = LPoly({prod(g), -sum(g), QuadElem(1)});
    f.p2 = LPoly({prod(-g), -sum(-g), QuadElem(1)});
  } else {
    f.delta2_zero = true;
    QuadElem dl = sqrt_as_quad(f.Delta1);
    f.root = dl;
    f.field = dl.field();
    QuadElem half_a(Rational(a / 2));
    f.p1 = LPoly({QuadElem((QuadElem(beta) - dl) / QuadElem(2)), half_a, QuadElem(1)});
    f.p2 = LPoly({QuadElem((QuadElem(beta) + dl) / QuadElem(2)), half_a, QuadElem(1)});
  }
  if (f.p1 * f.p2 != to_lpoly(q)) throw MathError("factorization identity failed");
  return f;
}

std::vector<FactorizationField> factorization_fields(const QPoly& q) {
  std::vector<FactorizationField> out;
  auto roots = rational_roots(cubic_resolvent(q));
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) { return x > y; });
  for (auto& r : roots) out.push_back({r, factor_over_quadratic(q, r).field});
  return out;
}

QPoint phi_affine(const QPoly& q, const Rational& u, const Rational& v) {
  Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1);
  Rational L = b - a * a / 4;
  Rational X = 2 * v + 2 * u * u + a * u;
  Rational Y = 2 * (X + L) * u + a * X / 2 + c;
  return QPoint::affine(X, Y);
}

QPoint phi_infinity(const QPoly& q, int sign) {
  if (sign > 0) return QPoint::infinity();
  Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1);
  Rational L = b - a * a / 4;
  return QPoint::affine(Rational(-L), Rational(-c + a * L / 2));
}

namespace {

QuarticPoint phi_inverse_two_torsion(const QPoly& q, const Rational& X) {
  Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1);
  Rational L = b - a * a / 4;
  QuarticPoint P;
  if (X + L == 0) {
    P.at_infinity = true;
    P.sign = -1;
    return P;
  }
  P.u = -(a * X / 2 + c) / (2 * (X + L));
  P.v = (X - 2 * P.u * P.u - a * P.u) / 2;
  return P;
}

QPoint image(const QPoly& q, const QuarticPoint& P) {
  return P.at_infinity ? phi_infinity(q, P.sign) : phi_affine(q, P.u, P.v);
}

QPoly poly_from_roots(const std::array<Rational, 4>& r) {
  QPoly p = QPoly::constant(1);
  for (auto& x : r) p = p * QPoly({Rational(-x), Rational(1)});
  return p;
}

}  // namespace

std::string QuarticPoint::str() const {
  if (at_infinity) return sign > 0 ? "[1:1:0]" : "[1:-1:0]";
  return "(" + u.get_str() + ", " + v.get_str() + ")";
}

PhiSpecialValues phi_special_values(const std::array<Rational, 4>& al) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (al[i] == al[j]) throw MathError("phi_special_values: repeated roots");
  QPoly q = poly_from_roots(al);
  PhiSpecialValues r(jacobian_cubic(q));
  r.roots = al;
  Rational a = q.coeff(3), b = q.coeff(2), c = q.coeff(1), d = q.coeff(0);
  for (int i = 1; i <= 3; ++i) {
    int j = i == 1 ? 2 : 1, k = i == 3 ? 2 : 3;
    r.delta[i - 1] = al[0] * al[i] + al[j] * al[k];
    r.gamma[i - 1] = al[0] + al[i] - al[j] - al[k];
    if (r.gamma[i - 1] == 0 && r.special == 0) r.special = i + 1;
  }
  r.at_plus = QPoint::infinity();
  if (r.special == 0) {
    Rational s1 = -a, s2 = b;
    r.at_minus = QPoint::affine(Rational(s1 * s1 / 4 - s2), Rational(r.gamma[0] * r.gamma[1] * r.gamma[2] / 8));
    for (int i = 0; i < 4; ++i) {
      Rational others = 0, pr = 1;
      for (int j = 0; j < 4; ++j)
        if (j != i) {
          others += al[j];
          pr *= al[i] - al[j];
        }
      r.at_roots[i] = QPoint::affine(Rational(al[i] * (al[i] - others)), pr);
    }
    Rational den = a * a * a - 4 * a * b + 8 * c;
    auto g = [&](const Rational& x) {
      Rational k1 = 2 * (a * a * a * a - 6 * a * a * b + 8 * b * b + 4 * a * c - 32 * d) / den;
      Rational k3 = -(3 * a * a - 8 * b) / den;
      return Rational((4 * b - a * a + k1 * x + x * x + k3 * x * x * x + x * x * x * x * x / den) / 8);
    };
    for (int i = 0; i < 3; ++i) {
      Rational B = 1;
      for (int j = 0; j < 3; ++j)
        if (j != i) B *= r.delta[i] - r.delta[j];
      QuarticPoint P;
      P.u = (g(r.gamma[i]) - g(Rational(-r.gamma[i]))) / r.gamma[i];
      P.v = -B / (r.gamma[i] * r.gamma[i]);
      r.inverse[i] = P;
    }
  } else {
    // relabel so that the vanishing gamma is gamma_2
    int s = r.special - 1;
    std::array<int, 4> idx{0, s, 0, 0};
    int pos = 2;
    for (int j = 1; j < 4; ++j)
      if (j != s) idx[pos++] = j;
    std::array<Rational, 4> be;
    for (int j = 0; j < 4; ++j) be[j] = al[idx[j]];
    r.at_minus = QPoint::affine(Rational(-r.delta[s - 1]), Rational(0));
    QPoint p1 = QPoint::affine(Rational(-2 * be[0] * be[1]), Rational(-(be[1] - be[0]) * (be[1] - be[2]) * (be[1] - be[3])));
    QPoint p3 = QPoint::affine(Rational(-2 * be[2] * be[3]), Rational(-(be[1] - be[2]) * (be[1] - be[3]) * (be[2] - be[3])));
    r.at_roots[idx[0]] = p1;
    r.at_roots[idx[1]] = r.E.neg(p1);
    r.at_roots[idx[2]] = p3;
    r.at_roots[idx[3]] = r.E.neg(p3);
    QuarticPoint inf;
    inf.at_infinity = true;
    inf.sign = -1;
    r.inverse[s - 1] = inf;
    QuarticPoint P;
    P.u = (be[2] + be[3]) / 2;
    P.v = (be[1] - be[0]) * (be[2] - be[3]) / 4;
    QuarticPoint Pn = P;
    Pn.v = -P.v;
    r.inverse[idx[2] - 1] = P;
    r.inverse[idx[3] - 1] = Pn;
  }
  bool ok = image(q, {true, 1, 0, 0}) == r.at_plus && phi_infinity(q, -1) == r.at_minus;
  for (int i = 0; i < 4; ++i) ok = ok && phi_affine(q, al[i], 0) == r.at_roots[i];
  for (int i = 0; i < 3; ++i)
    ok = ok && image(q, r.inverse[i]) == QPoint::affine(Rational(-r.delta[i]), Rational(0));
  r.matches_map = ok;
  return r;
}

ShiftReport shift_two_torsion(const std::array<Rational, 4>& al, int i) {
  if (i < 2 || i > 4) throw MathError("shift_two_torsion: index must be 2, 3 or 4");
  PhiSpecialValues sv = phi_special_values(al);
  QPoly q = poly_from_roots(al);
  Rational a = q.coeff(3), b = q.coeff(2), d = q.coeff(0);
  int k = i - 2;
  Rational A = -2 * sv.delta[k], B = 1;
  for (int j = 0; j < 3; ++j)
    if (j != k) {
      A += sv.delta[j];
      B *= sv.delta[k] - sv.delta[j];
    }
  ShiftReport rep(QCurve(A, B, 0));
  rep.A = A;
  rep.B = B;
  QuarticPoint pre = phi_inverse_two_torsion(q, Rational(-sv.delta[k]));
  if (sv.gamma[k] != 0) {
    rep.minus_B_over_y = -B / pre.v;
    rep.gamma_sq = sv.gamma[k] * sv.gamma[k];
    rep.disc_value = a * a - 4 * (b - sv.delta[k]);
  } else {
    rep.special = true;
    // the preimage of (0,0) is [1:-1:0], read with y-coordinate -1
    rep.minus_B_over_y = B;
    Rational pr = 1;
    for (int j = 1; j < 4; ++j)
      if (j != i - 1) pr *= (al[i - 1] - al[j]) * (al[i - 1] - al[j]);
    rep.gamma_sq = pr;
    rep.disc_value = sv.delta[k] * sv.delta[k] - 4 * d;
  }
  rep.holds = rep.minus_B_over_y == rep.gamma_sq && rep.gamma_sq == rep.disc_value;
  return rep;
}

TwoCover::TwoCover(const QuarticFactorization& fac, const QuadElem& delta) : fac_(fac), delta_(delta) {
  if (delta.is_zero()) throw MathError("two_cover: delta must be nonzero");
}

bool TwoCover::contains(const QuadElem& t, const QuadElem& y1, const QuadElem& y2) const {
  return delta_ * y1 * y1 == fac_.p1.eval(t) && delta_ * y2 * y2 == fac_.p2.eval(t);
}

std::pair<QuadElem, QuadElem> TwoCover::pushforward(const QuadElem& t, const QuadElem& y1, const QuadElem& y2) const {
  return {t, delta_ * y1 * y2};
}

TwoCover two_cover(const QPoly& q, const Rational& beta, const QuadElem& delta) {
  return TwoCover(factor_over_quadratic(q, beta), delta);
}

}  // namespace g5rp
