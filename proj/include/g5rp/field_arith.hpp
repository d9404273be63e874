#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g5rp {

using Integer = mpz_class;
using Rational = mpq_class;

struct MathError : std::domain_error {
  using std::domain_error::domain_error;
};

Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& s);
std::string str(const Rational& q);
std::string str(const Integer& n);

struct PrimePower {
  Integer p;
  int e;
};

// Factorization of |n| into ascending prime powers; n != 0.
std::vector<PrimePower> factor_integer(const Integer& n);
std::vector<Integer> prime_divisors(const Rational& q);
bool is_prime(const Integer& n);

int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

Integer squarefree_part(const Rational& q);
bool is_square(const Rational& q);
std::optional<Integer> exact_sqrt(const Integer& n);
std::optional<Rational> rational_sqrt(const Rational& q);

// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

class SquarefreeDisc {
 public:
  explicit SquarefreeDisc(const Integer& D);
  static SquarefreeDisc of_rational(const Rational& q);
  const Integer& value() const { return D_; }
  friend bool operator==(const SquarefreeDisc& x, const SquarefreeDisc& y) { return x.D_ == y.D_; }
  friend bool operator!=(const SquarefreeDisc& x, const SquarefreeDisc& y) { return !(x == y); }

 private:
  Integer D_;
};

// nullopt stands for Q itself.
using FieldId = std::optional<SquarefreeDisc>;

std::string field_name(const FieldId& f);

// a + b*sqrt(D). A value with no field attached is rational and combines with any field.
class QuadElem {
 public:
  QuadElem() = default;
  QuadElem(const Rational& a) : a_(a) {}
  QuadElem(long a) : a_(a) {}
  QuadElem(const Rational& a, const Rational& b, const SquarefreeDisc& D);
  QuadElem(const Rational& a, const Rational& b, const FieldId& D);
  static QuadElem sqrt_of(const SquarefreeDisc& D);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const FieldId& field() const { return D_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadElem conj() const;
  Rational norm() const;
  Rational trace() const;
  QuadElem inverse() const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem operator-() const;
  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend bool operator==(const QuadElem& x, const QuadElem& y);
  friend bool operator!=(const QuadElem& x, const QuadElem& y) { return !(x == y); }

  std::string str() const;

 private:
  static FieldId join(const FieldId& x, const FieldId& y);
  Integer disc_value() const;
  Rational a_, b_;
  FieldId D_;
};

std::optional<QuadElem> sqrt_in_quadfield(const QuadElem& u);
bool is_square_in(const QuadElem& u);

// Square class of q in L* / L*^2 for L = Q(sqrt D): nullopt when trivial, else the
// smaller (by |.|, then positive first) of squarefree_part(q) and squarefree_part(q*D).
std::optional<Integer> square_class_in_L(const Rational& q, const SquarefreeDisc& D);

// Canonical representative of the class of q in L*/L*^2 restricted to rationals.
Integer reduce_class(const Integer& s, const FieldId& L);

// Total order on square-class representatives: by |s|, then positive before negative.
bool class_less(const Integer& x, const Integer& y);

}  // namespace g5rp
