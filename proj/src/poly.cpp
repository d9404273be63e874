#include "g5rp/poly.hpp"

#include <algorithm>
#include <set>

namespace g5rp {

std::vector<Integer> integer_coeffs(const QPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer l = 1;
  for (auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  Integer g = 0;
  for (auto& c : p.coeffs()) {
    Integer v = c.get_num() * (l / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& v : out) v /= g;
  return out;
}

namespace {

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (auto& pp : factor_integer(n)) {
    size_t cur = ds.size();
    Integer pk = 1;
    for (int e = 1; e <= pp.e; ++e) {
      pk *= pp.p;
      for (size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p0) {
  if (p0.is_zero()) throw MathError("rational_roots of zero polynomial");
  std::vector<Rational> roots;
  QPoly p = p0;
  while (p.degree() > 0 && p.coeff(0) == 0) {
    roots.push_back(0);
    p = divrem(p, QPoly::x()).first;
  }
  while (p.degree() > 0) {
    auto ic = integer_coeffs(p);
    bool found = false;
    for (auto& num : divisors(ic.front())) {
      for (auto& den : divisors(ic.back())) {
        for (int s : {1, -1}) {
          Rational r = rat(Integer(s * num), den);
          if (p.eval(r) == 0) {
            roots.push_back(r);
            p = divrem(p, QPoly({Rational(-r), Rational(1)})).first;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

LPoly to_lpoly(const QPoly& p) {
  std::vector<QuadElem> c;
  for (auto& v : p.coeffs()) c.emplace_back(v);
  return LPoly(std::move(c));
}

QPoly to_qpoly(const LPoly& p) {
  std::vector<Rational> c;
  for (auto& v : p.coeffs()) {
    if (!v.is_rational()) throw MathError("polynomial has irrational coefficients");
    c.push_back(v.a());
  }
  return QPoly(std::move(c));
}

LPoly conj(const LPoly& p) {
  std::vector<QuadElem> c;
  for (auto& v : p.coeffs()) c.push_back(v.conj());
  return LPoly(std::move(c));
}

}  // namespace g5rp
