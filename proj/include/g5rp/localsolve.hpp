#pragma once

#include <string>
#include <vector>

#include "g5rp/poly.hpp"

namespace g5rp {

enum class Splitting { rational, split, inert, ramified };

// A place of L = Q(sqrt D) (or of Q when field is empty).
struct PlaceOfL {
  bool infinite = false;
  bool complex = false;
  Integer p;  // residue prime, 0 for infinite places
  FieldId field;
  Splitting type = Splitting::rational;
  int embedding = 1;  // sqrt(D) -> embedding * (chosen root), for split and real places
  std::string str() const;
};

Splitting splitting_type(const Integer& p, const FieldId& L);
std::vector<PlaceOfL> places_above(const Integer& p, const FieldId& L);
std::vector<PlaceOfL> infinite_places(const FieldId& L);

enum class Tri { no, yes, undecided };
std::string tri_str(Tri t);

// c z^2 = f(t) has a real point (t in P^1(R)).
bool has_real_point(const QPoly& f, int c_sign = 1);
// Same for an embedding of L into R.
bool has_real_point(const QuadElem& c, const LPoly& f, const PlaceOfL& place);

// c z^2 = f(t) over Q_p, t in P^1(Q_p), deg f <= 4. Throws MathError only on precision exhaustion,
// which cannot happen for squarefree f.
bool has_Qp_point(const Rational& c, const QPoly& f, const Integer& p);
Tri has_Qp_point_tri(const Rational& c, const QPoly& f, const Integer& p);

// c z^2 = f(t) over the completion L_v, t in P^1(L_v).
Tri has_Lv_point(const QuadElem& c, const LPoly& f, const PlaceOfL& place);

struct LocalVerdict {
  Tri result = Tri::yes;
  std::string place;                   // obstructing place when result == no
  std::vector<std::string> undecided;  // places without a verdict
  std::vector<Integer> primes_checked;
};

// delta z^2 = f(t) over L at the infinite places and all places above the given primes
// plus every prime <= prime_bound.
LocalVerdict locally_solvable_everywhere(const Rational& delta, const LPoly& f, const FieldId& L,
                                         std::vector<Integer> primes, long prime_bound);

// Valuation at a finite place of L; large sentinel for 0.
int place_valuation(const QuadElem& x, const PlaceOfL& place);

constexpr int kInfiniteValuation = 1 << 28;

}  // namespace g5rp
