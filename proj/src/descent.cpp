#include "g5rp/descent.hpp"

#include <algorithm>
#include <set>

#include "g5rp/localsolve.hpp"

namespace g5rp {

IsogenyDescentProblem::IsogenyDescentProblem(Rational a, Rational b) : A(std::move(a)), B(std::move(b)) {
  if (B == 0) throw MathError("descent: B = 0");
  if (A * A - 4 * B == 0) throw MathError("descent: A^2 - 4B = 0");
}

IsogenyDescentProblem IsogenyDescentProblem::at_torsion(const QCurve& E, const Rational& xT) {
  if (E.rhs(xT) != 0) throw MathError("descent: x = " + xT.get_str() + " is not a 2-torsion abscissa");
  QPoly shifted = E.cubic().shift(xT);
  if (shifted.coeff(0) != 0) throw MathError("descent: shift failed");
  return IsogenyDescentProblem(shifted.coeff(2), shifted.coeff(1));
}

std::pair<Integer, Integer> IsogenyDescentProblem::integral_model() const {
  Integer u = 1;
  // smallest u with A u^2 and B u^4 integral: lcm of denominators suffices
  mpz_lcm(u.get_mpz_t(), A.get_den().get_mpz_t(), B.get_den().get_mpz_t());
  Rational Au = A * u * u;
  Rational Bu = B * u * u * u * u;
  return {Au.get_num(), Bu.get_num()};
}

namespace {

std::vector<Integer> signed_divisors(const Integer& B) {
  std::vector<Integer> ds{1};
  for (auto& pp : factor_integer(B)) {
    size_t n = ds.size();
    for (size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pp.p);
  }
  std::vector<Integer> out;
  for (auto& d : ds) {
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end(), class_less);
  return out;
}

}  // namespace

SelmerReport isogeny_selmer_report(const IsogenyDescentProblem& P, long prime_bound) {
  SelmerReport rep;
  auto [A, B] = P.integral_model();
  std::set<Integer> primes{2};
  for (auto& pp : factor_integer(B)) primes.insert(pp.p);
  Integer disc = A * A - 4 * B;
  for (auto& pp : factor_integer(disc)) primes.insert(pp.p);
  for (long p = 3; p <= prime_bound; ++p)
    if (is_prime(Integer(p))) primes.insert(Integer(p));
  rep.primes.assign(primes.begin(), primes.end());
  rep.candidates = signed_divisors(B);
  for (auto& d : rep.candidates) {
    QPoly f({Rational(B) / d, Rational(0), Rational(A), Rational(0), Rational(d)});
    bool ok = has_real_point(f);
    for (auto it = primes.begin(); ok && it != primes.end(); ++it) ok = has_Qp_point(Rational(1), f, *it);
    if (ok) rep.set.push_back(d);
  }
  if (!is_closed(rep.set, std::nullopt)) rep.diagnostics.push_back("Selmer set not closed under products");
  return rep;
}

SelmerSet isogeny_selmer(const IsogenyDescentProblem& P, long prime_bound) {
  return isogeny_selmer_report(P, prime_bound).set;
}

Integer descent_image(const IsogenyDescentProblem& P, const QPoint& Q) {
  if (Q.inf) return 1;
  if (Q.x == 0) return squarefree_part(P.B);
  return squarefree_part(Q.x);
}

SelmerSet image_in_L(const SelmerSet& S, const FieldId& L) {
  std::set<Integer> seen;
  SelmerSet out;
  for (auto& s : S) {
    Integer r = reduce_class(s, L);
    if (seen.insert(r).second) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), class_less);
  return out;
}

SelmerSet subgroup_generated(const SelmerSet& gens, const FieldId& L) {
  std::set<Integer> G{1};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Integer> cur(G.begin(), G.end());
    for (auto& g : cur)
      for (auto& h : gens) {
        Integer k = reduce_class(squarefree_part(Rational(g * h)), L);
        if (G.insert(k).second) changed = true;
      }
  }
  SelmerSet out(G.begin(), G.end());
  std::sort(out.begin(), out.end(), class_less);
  return out;
}

SelmerSet quotient_by_trivial(const SelmerSet& S, const SelmerSet& trivial, const FieldId& L) {
  SelmerSet G = subgroup_generated(trivial, L);
  SelmerSet sorted = image_in_L(S, L);
  std::set<Integer> covered;
  SelmerSet out;
  for (auto& s : sorted) {
    if (covered.count(s)) continue;
    out.push_back(s);
    for (auto& g : G) covered.insert(reduce_class(squarefree_part(Rational(s * g)), L));
  }
  return out;
}

SelmerSet twist_products(const SelmerSet& S3, const SelmerSet& S4, const FieldId& L) {
  SelmerSet prods;
  for (auto& x : S3)
    for (auto& y : S4) prods.push_back(squarefree_part(Rational(x * y)));
  return image_in_L(prods, L);
}

bool is_closed(const SelmerSet& S, const FieldId& L) {
  std::set<Integer> in;
  for (auto& s : S) in.insert(reduce_class(s, L));
  for (auto& x : S)
    for (auto& y : S)
      if (!in.count(reduce_class(squarefree_part(Rational(x * y)), L))) return false;
  return true;
}

std::string set_str(const SelmerSet& S) {
  std::string s = "{";
  for (size_t i = 0; i < S.size(); ++i) s += (i ? ", " : "") + S[i].get_str();
  return s + "}";
}

}  // namespace g5rp
