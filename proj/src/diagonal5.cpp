#include "g5rp/diagonal5.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace g5rp {

Permutation Permutation::parse_cycles(const std::string& s) {
  Permutation p;
  std::vector<int> cyc;
  bool open = false;
  std::array<bool, 5> seen{};
  std::string num;
  auto flush_num = [&] {
    if (num.empty()) return;
    int v = std::stoi(num);
    num.clear();
    if (v < 1 || v > 5) throw std::invalid_argument("permutation point out of range 1..5");
    if (seen[v - 1]) throw std::invalid_argument("permutation point repeated");
    seen[v - 1] = true;
    cyc.push_back(v - 1);
  };
  std::string t = s;
  if (t == "id" || t.empty()) return p;
  for (char ch : t) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      if (!open) throw std::invalid_argument("permutation: digit outside a cycle");
      num += ch;
    } else if (ch == '(') {
      if (open) throw std::invalid_argument("permutation: nested cycle");
      open = true;
    } else if (ch == ')') {
      if (!open) throw std::invalid_argument("permutation: unmatched ')'");
      flush_num();
      for (size_t i = 0; i < cyc.size(); ++i) p.image[cyc[i]] = cyc[(i + 1) % cyc.size()];
      cyc.clear();
      open = false;
    } else if (ch == ' ' || ch == ',') {
      flush_num();
    } else {
      throw std::invalid_argument(std::string("permutation: unexpected character '") + ch + "'");
    }
  }
  if (open) throw std::invalid_argument("permutation: unterminated cycle");
  return p;
}

Permutation Permutation::from_order(const std::array<int, 5>& order) {
  Permutation p;
  for (int i = 0; i < 5; ++i) p.image[order[i]] = i;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  for (int i = 0; i < 5; ++i) p.image[image[i]] = i;
  return p;
}

std::string Permutation::cycles() const {
  std::string out;
  std::array<bool, 5> done{};
  for (int i = 0; i < 5; ++i) {
    if (done[i] || image[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = image[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

QMatrix reduced_matrix(const QMatrix& M, const std::array<int, 5>& order) {
  if (M.size() != 3) throw std::invalid_argument("matrix must have 3 rows");
  QMatrix A(3, std::vector<Rational>(5));
  for (int r = 0; r < 3; ++r) {
    if (M[r].size() != 5) throw std::invalid_argument("matrix rows must have 5 entries");
    for (int c = 0; c < 5; ++c) A[r][c] = M[r][order[c]];
  }
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return {};
    std::swap(A[piv], A[col]);
    Rational inv = 1 / A[col][col];
    for (auto& v : A[col]) v *= inv;
    for (int r = 0; r < 3; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rational m = A[r][col];
      for (int c = 0; c < 5; ++c) A[r][c] -= m * A[col][c];
    }
  }
  QMatrix R(3, std::vector<Rational>(2));
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 2; ++c) R[r][c] = -A[r][3 + c];
  return R;
}

std::vector<ModelChoice> models_enumerate(const QMatrix& M) {
  std::vector<ModelChoice> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      std::array<int, 5> order{};
      int k = 0;
      for (int c = 0; c < 5; ++c)
        if (c != i && c != j) order[k++] = c;
      order[3] = i;
      order[4] = j;
      QMatrix R = reduced_matrix(M, order);
      if (R.empty()) throw MathError("singular sub-configuration: columns other than " + std::to_string(i + 1) + "," +
                                     std::to_string(j + 1) + " are dependent");
      out.push_back({static_cast<int>(out.size()) + 1, Permutation::from_order(order), R});
    }
  return out;
}

Coords SignGroupElement::apply(const Coords& X) const {
  Coords Y = X;
  for (size_t i = 0; i < Y.size() && i < 5; ++i) Y[i] *= eps[i];
  return Y;
}

std::vector<SignGroupElement> SignGroupElement::all() {
  std::vector<SignGroupElement> out;
  for (int m = 0; m < 32; ++m) {
    SignGroupElement g;
    for (int i = 0; i < 5; ++i) g.eps[i] = (m >> (4 - i)) & 1 ? -1 : 1;
    out.push_back(g);
  }
  return out;
}

std::vector<Coords> orbit_normalize(const std::vector<Coords>& points) {
  std::vector<Coords> out;
  for (auto& P : points) out.push_back(orbit_representative(P));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void BiquarticModel::validate() const {
  for (const QPoly* p : {&p1, &p2}) {
    if (p->degree() != 4 || p->lead() != 1) throw MathError("biquartic model: quartics must be monic of degree 4");
    if (!is_separable(*p)) throw MathError("biquartic model: inseparable quartic " + p->str());
  }
  if (resultant(p1, p2) == 0) throw MathError("biquartic model: quartics share a root");
}

int appendix_index(int paper_j) {
  switch (paper_j) {
    case 1: return 1;
    case 2: return 3;
    case 3: return 2;
  }
  throw std::invalid_argument("factorization index must be 1, 2 or 3");
}

HQuotient HQuotient::canonical(Rational* z_scale) const {
  HQuotient h = *this;
  Integer s = squarefree_part(delta);
  // delta = s * k^2, so delta z^2 = s (k z)^2
  Rational k2 = delta / Rational(s);
  auto k = rational_sqrt(k2);
  if (!k) throw MathError("canonical twist: square part is not a square");
  h.delta = Rational(s);
  if (z_scale) *z_scale = *k;
  return h;
}

bool HQuotient::contains(const QuadElem& t, const QuadElem& z) const {
  return QuadElem(delta) * z * z == f.eval(t);
}

HQuotient CoveringCase::quotient(const Rational& delta1, const Rational& delta2, int s3, int s4) const {
  if (delta1 == 0 || delta2 == 0) throw MathError("zero twist");
  HQuotient h;
  h.delta = delta1 * delta2;
  h.s3 = s3;
  h.s4 = s4;
  h.field = field;
  h.f = (s3 > 0 ? f3.plus : f3.minus) * (s4 > 0 ? f4.plus : f4.minus);
  return h;
}

std::pair<QuadElem, QuadElem> CoveringCase::chi(const Rational& d1, const Rational& d2, const QuadElem& y3p,
                                                const QuadElem& y3m, const QuadElem& y4p, const QuadElem& y4m) const {
  return {QuadElem(d1) * y3p * y3m, QuadElem(d2) * y4p * y4m};
}

std::optional<FieldId> composite_field(const FieldId& x, const FieldId& y) {
  if (!x) return y;
  if (!y) return x;
  if (*x == *y) return x;
  return std::nullopt;
}

namespace {

void check_R(const QMatrix& R) {
  if (R.size() != 3) throw std::invalid_argument("reduced matrix must be 3x2");
  for (auto& row : R)
    if (row.size() != 2) throw std::invalid_argument("reduced matrix must be 3x2");
  const auto &a = R[0][0], &b = R[0][1], &c = R[1][0], &d = R[1][1], &e = R[2][0], &f = R[2][1];
  if (a * d - b * c == 0 || a * f - b * e == 0 || c * f - d * e == 0)
    throw MathError("diagonal genus 5: two of the quadratic forms are proportional");
  for (auto& row : R)
    if (row[0] == 0 && row[1] == 0) throw MathError("diagonal genus 5: zero quadratic form");
}

DiagonalGenus1 make_g1(const QMatrix& R, int row, const Coords& P0) {
  check_R(R);
  if (P0.size() != 5) throw std::invalid_argument("point must have 5 coordinates");
  return DiagonalGenus1(R[0][0], R[0][1], R[row][0], R[row][1], {P0[0], P0[1], P0[2], P0[row + 2]});
}

QMatrix default_M(const QMatrix& R) {
  QMatrix M(3, std::vector<Rational>(5));
  for (int r = 0; r < 3; ++r) {
    M[r][0] = -R[r][0];
    M[r][1] = -R[r][1];
    M[r][2 + r] = 1;
  }
  return M;
}

}  // namespace

DiagonalGenus5::DiagonalGenus5(QMatrix R, Coords P0)
    : R_(std::move(R)),
      M_(default_M(R_)),
      perm_(Permutation::from_order({2, 3, 4, 0, 1})),
      P0_(std::move(P0)),
      g3_(make_g1(R_, 1, P0_)),
      g4_(make_g1(R_, 2, P0_)) {
  if (!on_curve(P0_)) throw MathError("diagonal genus 5: base point is not on the curve");
  biquartic().validate();
}

DiagonalGenus5 DiagonalGenus5::from_matrix(const QMatrix& M, const Coords& P0, const Permutation& perm) {
  QMatrix R = reduced_matrix(M, perm.order());
  if (R.empty()) throw MathError("singular sub-configuration for permutation " + perm.cycles());
  if (P0.size() != 5) throw std::invalid_argument("point must have 5 coordinates");
  auto o = perm.order();
  Coords model{P0[o[3]], P0[o[4]], P0[o[0]], P0[o[1]], P0[o[2]]};
  DiagonalGenus5 C(R, model);
  C.M_ = M;
  C.perm_ = perm;
  if (!C.on_original(P0)) throw MathError("diagonal genus 5: base point is not on the original model");
  return C;
}

Coords DiagonalGenus5::to_original(const Coords& X) const {
  auto o = perm_.order();
  Coords Y(5);
  Y[o[3]] = X[0];
  Y[o[4]] = X[1];
  Y[o[0]] = X[2];
  Y[o[1]] = X[3];
  Y[o[2]] = X[4];
  return Y;
}

Coords DiagonalGenus5::from_original(const Coords& Y) const {
  auto o = perm_.order();
  return {Y[o[3]], Y[o[4]], Y[o[0]], Y[o[1]], Y[o[2]]};
}

bool DiagonalGenus5::on_curve(const Coords& X) const {
  if (X.size() != 5) return false;
  for (int r = 0; r < 3; ++r)
    if (R_[r][0] * X[0] * X[0] + R_[r][1] * X[1] * X[1] != X[r + 2] * X[r + 2]) return false;
  return true;
}

bool DiagonalGenus5::on_original(const Coords& Y) const {
  if (Y.size() != 5) return false;
  for (auto& row : M_) {
    Rational s = 0;
    for (int c = 0; c < 5; ++c) s += row[c] * Y[c] * Y[c];
    if (s != 0) return false;
  }
  return true;
}

std::array<QCurve, 5> DiagonalGenus5::jacobian_factors() const {
  const Rational &A = a(), &B = b(), &C = c(), &D = d(), &E = e(), &F = f();
  return {curve_with_roots(Rational(C * (A * F - E * B)), Rational(E * (A * D - C * B))),
          curve_with_roots(Rational(-D * (A * F - E * B)), Rational(-F * (A * D - C * B))),
          curve_with_roots(Rational(C * F), Rational(E * D)), curve_with_roots(Rational(A * F), Rational(E * B)),
          curve_with_roots(Rational(A * D), Rational(C * B))};
}

QPoly DiagonalGenus5::p4() const {
  auto P = g3_.conic_polys();
  Rational inv = 1 / (P0_[4] * P0_[4]);
  return ((P[0] * P[0]).scaled(e()) + (P[1] * P[1]).scaled(f())).scaled(inv);
}

BiquarticModel DiagonalGenus5::biquartic() const {
  return {p3(), p4(),
          "p3 from rows (a,b),(c,d) and p4 from rows (a,b),(e,f); t parametrizes aX0^2+bX1^2=X2^2 through P0"};
}

BiquarticPoint DiagonalGenus5::to_biquartic(const Coords& X) const {
  if (!on_curve(X)) throw MathError("point not on the diagonal genus 5 curve");
  TValue t = g3_.inverse({X[0], X[1], X[2]});
  auto F = g3_.forward(t);
  Rational lam;
  for (int i : {2, 0, 1})
    if (X[i] != 0) {
      lam = F[i] / X[i];
      break;
    }
  return {t, lam * X[3] / P0_[3], lam * X[4] / P0_[4]};
}

std::optional<Coords> DiagonalGenus5::from_biquartic(const TValue& t) const {
  auto F = g3_.forward(t);
  auto x3 = rational_sqrt(c() * F[0] * F[0] + d() * F[1] * F[1]);
  auto x4 = rational_sqrt(e() * F[0] * F[0] + f() * F[1] * F[1]);
  if (!x3 || !x4) return std::nullopt;
  Coords X{F[0], F[1], F[2], *x3, *x4};
  bool allzero = true;
  for (auto& v : X) allzero = allzero && v == 0;
  if (allzero) throw MathError("conic parametrization degenerated");
  return X;
}

std::vector<DiagonalGenus5::TrivialImage> DiagonalGenus5::trivial_images() const {
  std::vector<TrivialImage> out;
  for (auto& g : SignGroupElement::all()) {
    Coords X = g.apply(P0_);
    out.push_back({g, X, to_biquartic(X).t});
  }
  return out;
}

std::vector<TValue> DiagonalGenus5::trivial_t_values() const {
  std::vector<TValue> ts;
  for (auto& im : trivial_images())
    if (std::find(ts.begin(), ts.end(), im.t) == ts.end()) ts.push_back(im.t);
  std::sort(ts.begin(), ts.end(), tvalue_less);
  return ts;
}

BiquarticFactor DiagonalGenus5::factor3(int j) const {
  int k = appendix_index(j);
  auto fac = g3_.factorizations()[k - 1];
  return {3, j, k, fac.alpha_sq, fac.field, fac.plus, fac.minus, Rational(a() * d()), Rational(b() * c()), fac.torsion};
}

BiquarticFactor DiagonalGenus5::factor4(int j) const {
  int k = appendix_index(j);
  auto fac = g4_.factorizations()[k - 1];
  // p4(t) = (x3/x4)^8 p_R4(lam t), lam = x4^2/x3^2; each quadratic factor takes (x3/x4)^4.
  Rational lam = P0_[4] * P0_[4] / (P0_[3] * P0_[3]);
  Rational k4 = 1 / (lam * lam);
  auto rescale = [&](const LPoly& p) { return p.scale_var(QuadElem(lam)).scaled(QuadElem(k4)); };
  BiquarticFactor out{4, j, k, fac.alpha_sq, fac.field, rescale(fac.plus), rescale(fac.minus), Rational(a() * f()),
                      Rational(b() * e()), fac.torsion};
  if (out.plus * out.minus != to_lpoly(p4())) throw MathError("factorization of p4 failed to verify");
  return out;
}

CoveringCase DiagonalGenus5::covering(int j3, int j4) const {
  CoveringCase cc;
  cc.j3 = j3;
  cc.j4 = j4;
  cc.f3 = factor3(j3);
  cc.f4 = factor4(j4);
  auto L = composite_field(cc.f3.field, cc.f4.field);
  if (!L)
    throw MathError("Q(alpha3, alpha4) = Q(" + field_name(cc.f3.field) + ", " + field_name(cc.f4.field) +
                    ") has degree 4");
  cc.field = *L;
  return cc;
}

std::optional<std::pair<int, int>> DiagonalGenus5::default_indices() const {
  for (int j3 = 1; j3 <= 3; ++j3)
    for (int j4 = 1; j4 <= 3; ++j4)
      if (composite_field(factor3(j3).field, factor4(j4).field)) return std::make_pair(j3, j4);
  return std::nullopt;
}

}  // namespace g5rp
