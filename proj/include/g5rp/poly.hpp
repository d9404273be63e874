#pragma once

#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "g5rp/field_arith.hpp"

namespace g5rp {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }
inline std::string to_str(const Rational& x) { return x.get_str(); }
inline std::string to_str(const QuadElem& x) { return x.str(); }

// Dense univariate polynomial, coefficients lowest degree first.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }
  static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
  static Poly monomial(const F& v, int k) {
    std::vector<F> c(k + 1);
    c[k] = v;
    return Poly(std::move(c));
  }
  static Poly x() { return Poly(std::vector<F>{F(0), F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : F(0); }
  const F& lead() const {
    if (c_.empty()) throw MathError("leading coefficient of zero polynomial");
    return c_.back();
  }

  template <class U>
  auto eval(const U& t) const {
    using R = std::conditional_t<std::is_same_v<F, QuadElem> || std::is_same_v<U, QuadElem>, QuadElem, Rational>;
    R acc = R(0);
    for (int i = degree(); i >= 0; --i) acc = R(acc * t) + R(c_[i]);
    return acc;
  }

  Poly derivative() const {
    std::vector<F> d;
    for (int i = 1; i <= degree(); ++i) d.push_back(F(c_[i] * F(i)));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = F(-v);
    return r;
  }
  friend Poly operator*(const Poly& x, const Poly& y) {
    if (x.is_zero() || y.is_zero()) return Poly();
    std::vector<F> r(x.c_.size() + y.c_.size() - 1);
    for (size_t i = 0; i < x.c_.size(); ++i)
      for (size_t j = 0; j < y.c_.size(); ++j) r[i + j] += F(x.c_[i] * y.c_[j]);
    return Poly(std::move(r));
  }
  Poly scaled(const F& s) const {
    std::vector<F> r;
    for (auto& v : c_) r.push_back(F(v * s));
    return Poly(std::move(r));
  }
  // p(s*t)
  Poly scale_var(const F& s) const {
    std::vector<F> r;
    F pw = F(1);
    for (auto& v : c_) {
      r.push_back(F(v * pw));
      pw = F(pw * s);
    }
    return Poly(std::move(r));
  }
  // p(t + s)
  Poly shift(const F& s) const {
    Poly r;
    Poly lin(std::vector<F>{s, F(1)});
    for (int i = degree(); i >= 0; --i) r = r * lin + constant(c_[i]);
    return r;
  }
  // t^d p(1/t) with d = deg p
  Poly reversed(int d = -1) const {
    if (d < 0) d = degree();
    std::vector<F> r(d + 1);
    for (int i = 0; i <= degree(); ++i) r[d - i] = c_[i];
    return Poly(std::move(r));
  }
  Poly monic() const { return scaled(F(F(1) / lead())); }

  friend bool operator==(const Poly& x, const Poly& y) { return x.c_ == y.c_; }
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (g5rp::is_zero(c_[i])) continue;
      std::string cs = to_str(c_[i]);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      if (compound) cs = "(" + cs + ")";
      if (!s.empty()) s += (cs[0] == '-') ? " - " : " + ";
      else if (cs[0] == '-') s += "-";
      if (cs[0] == '-') cs = cs.substr(1);
      if (i == 0)
        s += cs;
      else {
        if (cs != "1") s += cs + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && g5rp::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using QPoly = Poly<Rational>;
using LPoly = Poly<QuadElem>;

template <class F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& num, const Poly<F>& den) {
  if (den.is_zero()) throw MathError("division by zero polynomial");
  std::vector<F> r = num.coeffs();
  int dn = den.degree();
  int qn = num.degree() - dn;
  if (qn < 0) return {Poly<F>(), num};
  std::vector<F> q(qn + 1);
  F inv = F(F(1) / den.lead());
  for (int k = qn; k >= 0; --k) {
    F coef = F(r[k + dn] * inv);
    q[k] = coef;
    if (is_zero(coef)) continue;
    for (int j = 0; j <= dn; ++j) r[k + j] -= F(coef * den.coeffs()[j]);
  }
  r.resize(dn);
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> gcd(Poly<F> x, Poly<F> y) {
  while (!y.is_zero()) {
    auto r = divrem(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

template <class F>
F resultant(const Poly<F>& p, const Poly<F>& q) {
  if (p.is_zero() || q.is_zero()) return F(0);
  int m = p.degree(), n = q.degree();
  if (n == 0) {
    F r = F(1);
    for (int i = 0; i < m; ++i) r = F(r * q.lead());
    return r;
  }
  if (m < n) {
    F r = resultant(q, p);
    return (m * n) % 2 ? F(-r) : r;
  }
  auto rem = divrem(p, q).second;
  if (rem.is_zero()) return F(0);
  int k = rem.degree();
  F lc_pow = F(1);
  for (int i = 0; i < m - k; ++i) lc_pow = F(lc_pow * q.lead());
  F r = F(lc_pow * resultant(q, rem));
  return (m * n) % 2 ? F(-r) : r;
}

// Supported degrees 2..4; normalized so that disc(t^2 + a t + b) = a^2 - 4b.
template <class F>
F discriminant(const Poly<F>& p) {
  int n = p.degree();
  if (n < 2 || n > 4) throw MathError("discriminant: unsupported degree " + std::to_string(n));
  F r = F(resultant(p, p.derivative()) / p.lead());
  return (n * (n - 1) / 2) % 2 ? F(-r) : r;
}

template <class F>
bool is_separable(const Poly<F>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<Rational> rational_roots(const QPoly& p);

// Embed a rational polynomial into L[t].
LPoly to_lpoly(const QPoly& p);
// Rational polynomial from an L-polynomial whose coefficients are all rational.
QPoly to_qpoly(const LPoly& p);
LPoly conj(const LPoly& p);

// Clear denominators: returns primitive integer-coefficient multiple (content removed, sign kept).
std::vector<Integer> integer_coeffs(const QPoly& p);

}  // namespace g5rp
