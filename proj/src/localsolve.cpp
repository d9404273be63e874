#include "g5rp/localsolve.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace g5rp {

std::string PlaceOfL::str() const {
  if (infinite) {
    if (complex) return "complex";
    if (!field) return "inf";
    return embedding > 0 ? "real(+)" : "real(-)";
  }
  std::string s = p.get_str();
  switch (type) {
    case Splitting::rational: return s;
    case Splitting::split: return s + " (split, " + (embedding > 0 ? "+" : "-") + ")";
    case Splitting::inert: return s + " (inert)";
    case Splitting::ramified: return s + " (ramified)";
  }
  return s;
}

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::no: return "no";
    case Tri::yes: return "yes";
    default: return "undecided";
  }
}

Splitting splitting_type(const Integer& p, const FieldId& L) {
  if (!L) return Splitting::rational;
  const Integer& D = L->value();
  if (p == 2) {
    Integer m = D % 8;
    if (m < 0) m += 8;
    if (m == 1) return Splitting::split;
    if (m == 5) return Splitting::inert;
    return Splitting::ramified;
  }
  if (D % p == 0) return Splitting::ramified;
  return legendre(D, p) == 1 ? Splitting::split : Splitting::inert;
}

std::vector<PlaceOfL> places_above(const Integer& p, const FieldId& L) {
  PlaceOfL pl;
  pl.p = p;
  pl.field = L;
  pl.type = splitting_type(p, L);
  if (pl.type != Splitting::split) return {pl};
  PlaceOfL q = pl;
  q.embedding = -1;
  return {pl, q};
}

std::vector<PlaceOfL> infinite_places(const FieldId& L) {
  PlaceOfL pl;
  pl.infinite = true;
  pl.field = L;
  if (L && L->value() < 0) {
    pl.complex = true;
    return {pl};
  }
  if (!L) return {pl};
  PlaceOfL q = pl;
  q.embedding = -1;
  return {pl, q};
}

namespace {

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// p-integral rational -> residue mod m (m a power of p)
Integer rat_mod(const Rational& x, const Integer& m) {
  Integer inv;
  Integer den = x.get_den();
  if (!mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t())) throw MathError("rat_mod: denominator not invertible");
  return mod_pos(Integer(x.get_num() * inv), m);
}

int legendre_rat(const Rational& x, const Integer& p) { return legendre(rat_mod(x, p), p); }

Integer ipow(const Integer& p, int k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

class LocalField {
 public:
  explicit LocalField(const PlaceOfL& pl) : pl_(pl) {
    const Integer& p = pl.p;
    if (pl.field) D_ = pl.field->value();
    e_ = pl.type == Splitting::ramified ? 2 : 1;
    if (pl.type == Splitting::ramified) {
      if (p == 2 && mod_pos(D_, 4) == 3)
        pi_ = QuadElem(Rational(1), Rational(1), pl.field);
      else
        pi_ = QuadElem::sqrt_of(*pl.field);
    } else {
      pi_ = QuadElem(Rational(p));
    }
    long pn = p.get_si();
    if (pl.type == Splitting::inert) {
      QuadElem w = p == 2 ? QuadElem(Rational(1, 2), Rational(1, 2), pl.field) : QuadElem::sqrt_of(*pl.field);
      for (long a = 0; a < pn; ++a)
        for (long b = 0; b < pn; ++b) res_.push_back(QuadElem(Rational(a)) + QuadElem(Rational(b)) * w);
    } else {
      for (long a = 0; a < pn; ++a) res_.push_back(QuadElem(Rational(a)));
    }
  }

  int e() const { return e_; }
  const QuadElem& pi() const { return pi_; }
  const std::vector<QuadElem>& residues() const { return res_; }
  bool two() const { return pl_.p == 2; }

  int val(const QuadElem& x) const {
    if (x.is_zero()) return kInfiniteValuation;
    const Integer& p = pl_.p;
    switch (pl_.type) {
      case Splitting::rational: return valuation(x.a(), p);
      case Splitting::inert: return valuation(x.norm(), p) / 2;
      case Splitting::ramified: return valuation(x.norm(), p);
      case Splitting::split: break;
    }
    if (x.is_rational()) return valuation(x.a(), p);
    Integer den;
    mpz_lcm(den.get_mpz_t(), x.a().get_den().get_mpz_t(), x.b().get_den().get_mpz_t());
    Integer A = x.a().get_num() * (den / x.a().get_den());
    Integer B = x.b().get_num() * (den / x.b().get_den());
    int K = valuation(Integer(A * A - D_ * B * B), p) + 1;
    Integer m = ipow(p, K);
    Integer v = mod_pos(Integer(A + pl_.embedding * B * root(K)), m);
    int k = v == 0 ? K : valuation(v, p);
    return k - valuation(den, p);
  }

  bool unit_square(const QuadElem& u) const {
    const Integer& p = pl_.p;
    if (!two()) {
      switch (pl_.type) {
        case Splitting::rational: return legendre_rat(u.a(), p) == 1;
        case Splitting::inert: return legendre_rat(u.norm(), p) == 1;
        case Splitting::ramified: return legendre_rat(u.a(), p) == 1;
        case Splitting::split: return legendre(residue_split(u, p), p) == 1;
      }
    }
    for (auto& x : reps(e_ + 1)) {
      if (val(x) != 0) continue;
      if (val(u - x * x) >= 2 * e_ + 1) return true;
    }
    return false;
  }

  // Representatives of O / pi^m.
  const std::vector<QuadElem>& reps(int m) const {
    auto it = reps_cache_.find(m);
    if (it != reps_cache_.end()) return it->second;
    std::vector<QuadElem> out{QuadElem(0)};
    QuadElem pw(1);
    for (int i = 0; i < m; ++i) {
      std::vector<QuadElem> next;
      for (auto& base : out)
        for (auto& r : res_) next.push_back(base + r * pw);
      out = std::move(next);
      pw = pw * pi_;
    }
    return reps_cache_[m] = out;
  }

 private:
  // Residue of a unit at a split place.
  Integer residue_split(const QuadElem& u, const Integer& p) const {
    if (u.is_rational()) return rat_mod(u.a(), p);
    Integer den;
    mpz_lcm(den.get_mpz_t(), u.a().get_den().get_mpz_t(), u.b().get_den().get_mpz_t());
    Integer A = u.a().get_num() * (den / u.a().get_den());
    Integer B = u.b().get_num() * (den / u.b().get_den());
    int k = valuation(den, p);
    Integer pk = ipow(p, k);
    Integer v = mod_pos(Integer(A + pl_.embedding * B * root(k + 1)), Integer(pk * p)) / pk;
    return rat_mod(Rational(v, Integer(den / pk)), p);
  }

  // sqrt(D) in Z_p modulo p^K (split places only).
  Integer root(int K) const {
    const Integer& p = pl_.p;
    if (K <= root_prec_) return mod_pos(root_, ipow(p, K));
    if (p == 2) {
      Integer r = 1;
      int k = 2;
      while (k < K) {
        Integer m = ipow(p, k + 2);
        if (mod_pos(Integer(r * r - D_), m) != 0) r += ipow(p, k);
        ++k;
      }
      root_ = r;
    } else {
      Integer r = 0;
      for (Integer a = 1; a < p; ++a)
        if (mod_pos(Integer(a * a - D_), p) == 0) {
          r = a;
          break;
        }
      int k = 1;
      while (k < K) {
        k = std::min(2 * k, K);
        Integer m = ipow(p, k);
        Integer inv;
        Integer two_r = 2 * r;
        mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), m.get_mpz_t());
        r = mod_pos(Integer(r - (r * r - D_) * inv), m);
      }
      root_ = r;
    }
    root_prec_ = K;
    return mod_pos(root_, ipow(p, K));
  }

  PlaceOfL pl_;
  Integer D_ = 0;
  int e_ = 1;
  QuadElem pi_;
  std::vector<QuadElem> res_;
  mutable Integer root_ = 0;
  mutable int root_prec_ = 0;
  mutable std::map<int, std::vector<QuadElem>> reps_cache_;
};

QuadElem qpow(const QuadElem& x, int k) {
  QuadElem base = k < 0 ? x.inverse() : x;
  QuadElem r(1);
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

class Engine {
 public:
  Engine(const LocalField& K, int cap) : K_(K), cap_(cap) {}
  bool hit_cap() const { return hit_; }

  // Some t in O with h(t) a square in K.
  bool solve(const LPoly& h, int depth) {
    if (h.is_zero()) return true;
    if (depth > cap_) {
      hit_ = true;
      return false;
    }
    int cont = kInfiniteValuation;
    for (auto& c : h.coeffs())
      if (!c.is_zero()) cont = std::min(cont, K_.val(c));
    int epar = ((cont % 2) + 2) % 2;
    LPoly h1 = h.scaled(qpow(K_.pi(), -cont));
    LPoly dh1 = h1.derivative();
    for (auto& r : K_.residues()) {
      QuadElem v = h1.eval(r);
      if (v.is_zero()) return true;
      int vv = K_.val(v);
      QuadElem dv = dh1.eval(r);
      if (!dv.is_zero() && vv > 2 * K_.val(dv)) return true;
      if (vv == 0) {
        if (epar) continue;
        if (!K_.two()) {
          if (K_.unit_square(v)) return true;
          continue;
        }
        for (auto& s : K_.reps(2 * K_.e()))
          if (K_.unit_square(h1.eval(r + K_.pi() * s))) return true;
        continue;
      }
      LPoly next = h1.shift(r).scale_var(K_.pi()).scaled(qpow(K_.pi(), epar));
      if (solve(next, depth + 1)) return true;
    }
    return false;
  }

 private:
  const LocalField& K_;
  int cap_;
  bool hit_ = false;
};

Tri run_place(const LPoly& h, const PlaceOfL& place) {
  LocalField K(place);
  int k0 = 8;
  if (h.degree() >= 2 && h.degree() <= 4) {
    QuadElem disc = discriminant(h);
    if (!disc.is_zero()) k0 = 2 * std::max(0, K.val(disc)) + 2;
  }
  LPoly rev = h.reversed(4).scale_var(K.pi());
  int cap = k0;
  for (int round = 0; round < 4; ++round, cap *= 2) {
    Engine E(K, cap);
    if (E.solve(h, 0) || E.solve(rev, 0)) return Tri::yes;
    if (!E.hit_cap()) return Tri::no;
  }
  return Tri::undecided;
}

int sign_of(const QuadElem& x) {
  int sa = sgn(x.a()), sb = sgn(x.b());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  Rational lhs = x.a() * x.a();
  Rational rhs = x.b() * x.b() * Rational(x.field()->value());
  int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

int real_root_count(const LPoly& f) {
  std::vector<LPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    auto r = divrem(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto changes = [&](bool neg) {
    int n = 0, last = 0;
    for (auto& p : seq) {
      if (p.is_zero()) continue;
      int s = sign_of(p.lead());
      if (neg && p.degree() % 2) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++n;
      last = s;
    }
    return n;
  };
  return changes(true) - changes(false);
}

bool real_point(const LPoly& g) {
  if (g.is_zero() || g.degree() < 4) return true;
  if (sign_of(g.lead()) > 0) return true;
  if (sign_of(g.coeff(0)) >= 0) return true;
  return real_root_count(g) > 0;
}

}  // namespace

int place_valuation(const QuadElem& x, const PlaceOfL& place) { return LocalField(place).val(x); }

bool has_real_point(const QPoly& f, int c_sign) { return real_point(to_lpoly(f).scaled(QuadElem(c_sign))); }

bool has_real_point(const QuadElem& c, const LPoly& f, const PlaceOfL& place) {
  if (place.complex) return true;
  LPoly g = f.scaled(c);
  if (place.embedding < 0) g = conj(g);
  return real_point(g);
}

Tri has_Qp_point_tri(const Rational& c, const QPoly& f, const Integer& p) {
  PlaceOfL pl;
  pl.p = p;
  return run_place(to_lpoly(f).scaled(QuadElem(c)), pl);
}

bool has_Qp_point(const Rational& c, const QPoly& f, const Integer& p) {
  Tri t = has_Qp_point_tri(c, f, p);
  if (t == Tri::undecided) throw MathError("local solvability at " + p.get_str() + ": precision exhausted");
  return t == Tri::yes;
}

Tri has_Lv_point(const QuadElem& c, const LPoly& f, const PlaceOfL& place) {
  if (place.infinite) return has_real_point(c, f, place) ? Tri::yes : Tri::no;
  return run_place(f.scaled(c), place);
}

LocalVerdict locally_solvable_everywhere(const Rational& delta, const LPoly& f, const FieldId& L,
                                         std::vector<Integer> primes, long prime_bound) {
  LocalVerdict out;
  QuadElem c(delta);
  for (auto& pl : infinite_places(L)) {
    if (!has_real_point(c, f, pl)) {
      out.result = Tri::no;
      out.place = pl.str();
      return out;
    }
  }
  std::set<Integer> ps(primes.begin(), primes.end());
  ps.insert(2);
  for (long p = 2; p <= prime_bound; ++p)
    if (is_prime(Integer(p))) ps.insert(Integer(p));
  for (auto& p : ps) {
    out.primes_checked.push_back(p);
    for (auto& pl : places_above(p, L)) {
      Tri t = has_Lv_point(c, f, pl);
      if (t == Tri::no) {
        out.result = Tri::no;
        out.place = pl.str();
        return out;
      }
      if (t == Tri::undecided) out.undecided.push_back(pl.str());
    }
  }
  out.result = out.undecided.empty() ? Tri::yes : Tri::undecided;
  return out;
}

}  // namespace g5rp
