#include "g5rp/field_arith.hpp"

#include <algorithm>
#include <cctype>

namespace g5rp {

Rational rat(long num, long den) {
  if (den == 0) throw MathError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rat(const Integer& num, const Integer& den) {
  if (den == 0) throw MathError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto check_int = [](const std::string& part) {
    size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + text);
  if (num[0] == '+') num = num.substr(1);
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  return rat(n, d);
}

std::string str(const Rational& q) { return q.get_str(); }
std::string str(const Integer& n) { return n.get_str(); }

bool is_prime(const Integer& n) { return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

namespace {

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1, m = 64;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<PrimePower> factor_integer(const Integer& n0) {
  if (n0 == 0) throw MathError("factor_integer of zero");
  Integer n = abs(n0);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> res;
  for (const auto& p : primes) {
    if (!res.empty() && res.back().p == p)
      ++res.back().e;
    else
      res.push_back({p, 1});
  }
  return res;
}

std::vector<Integer> prime_divisors(const Rational& q) {
  if (q == 0) throw MathError("prime_divisors of zero");
  std::vector<Integer> out;
  for (auto& pp : factor_integer(q.get_num())) out.push_back(pp.p);
  for (auto& pp : factor_integer(q.get_den())) out.push_back(pp.p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw MathError("valuation of zero");
  Integer m = n;
  return static_cast<int>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& q, const Integer& p) {
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

Integer squarefree_part(const Rational& q) {
  if (q == 0) throw MathError("squarefree_part of zero");
  Integer s = sgn(q);
  Integer nd = q.get_num() * q.get_den();
  for (auto& pp : factor_integer(nd))
    if (pp.e % 2) s *= pp.p;
  return s;
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  auto n = exact_sqrt(q.get_num());
  if (!n) return std::nullopt;
  auto d = exact_sqrt(q.get_den());
  if (!d) return std::nullopt;
  return rat(*n, *d);
}

bool is_square(const Rational& q) { return rational_sqrt(q).has_value(); }

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

SquarefreeDisc::SquarefreeDisc(const Integer& D) : D_(D) {
  if (D == 0 || D == 1) throw MathError("degenerate quadratic field discriminant " + D.get_str());
  if (squarefree_part(Rational(D)) != D) throw MathError("discriminant not squarefree: " + D.get_str());
}

SquarefreeDisc SquarefreeDisc::of_rational(const Rational& q) { return SquarefreeDisc(squarefree_part(q)); }

std::string field_name(const FieldId& f) { return f ? "Q(sqrt(" + f->value().get_str() + "))" : "Q"; }

QuadElem::QuadElem(const Rational& a, const Rational& b, const SquarefreeDisc& D) : a_(a), b_(b), D_(D) {}

QuadElem::QuadElem(const Rational& a, const Rational& b, const FieldId& D) : a_(a), b_(b), D_(D) {
  if (!D && sgn(b) != 0) throw MathError("irrational part without a field");
}

QuadElem QuadElem::sqrt_of(const SquarefreeDisc& D) { return QuadElem(0, 1, D); }

FieldId QuadElem::join(const FieldId& x, const FieldId& y) {
  if (!x) return y;
  if (!y) return x;
  if (*x != *y) throw MathError("mixing elements of different quadratic fields");
  return x;
}

Integer QuadElem::disc_value() const { return D_ ? D_->value() : Integer(0); }

QuadElem QuadElem::conj() const {
  QuadElem r = *this;
  r.b_ = -b_;
  return r;
}

Rational QuadElem::norm() const { return Rational(a_ * a_ - Rational(disc_value()) * b_ * b_); }

Rational QuadElem::trace() const { return Rational(2 * a_); }

QuadElem QuadElem::inverse() const {
  Rational n = norm();
  if (n == 0) throw MathError("inverse of zero");
  QuadElem r = conj();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  D_ = join(D_, o.D_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  D_ = join(D_, o.D_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  D_ = join(D_, o.D_);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + Rational(disc_value()) * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = na;
  b_ = nb;
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (sgn(o.b_) == 0) {
    D_ = join(D_, o.D_);
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

QuadElem QuadElem::operator-() const {
  QuadElem r = *this;
  r.a_ = -a_;
  r.b_ = -b_;
  return r;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  if (sgn(x.b_) == 0) return true;
  return x.D_ == y.D_;
}

std::string QuadElem::str() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
  if (b_ == -1)
    s += "-";
  else if (b_ != 1)
    s += b_.get_str() + "*";
  return s + "sqrt(" + D_->value().get_str() + ")";
}

std::optional<QuadElem> sqrt_in_quadfield(const QuadElem& u) {
  if (u.is_zero()) return u;
  if (!u.field()) {
    auto r = rational_sqrt(u.a());
    if (!r) return std::nullopt;
    return QuadElem(*r);
  }
  const SquarefreeDisc& D = *u.field();
  auto n = rational_sqrt(u.norm());
  if (!n) return std::nullopt;
  Rational Dq(D.value());
  for (int sgnn : {1, -1}) {
    Rational nn = sgnn * *n;
    Rational x2 = (u.a() + nn) / 2;
    Rational y2 = (u.a() - nn) / (2 * Dq);
    auto x = rational_sqrt(x2);
    if (!x) continue;
    auto y = rational_sqrt(y2);
    if (!y) continue;
    Rational yy = *y;
    if (*x != 0) yy = u.b() / (2 * *x);
    QuadElem v(*x, yy, D);
    if (v * v == u) return v;
  }
  return std::nullopt;
}

bool is_square_in(const QuadElem& u) { return sqrt_in_quadfield(u).has_value(); }

bool class_less(const Integer& x, const Integer& y) {
  int c = cmp(abs(x), abs(y));
  if (c != 0) return c < 0;
  return x > y;
}

Integer reduce_class(const Integer& s, const FieldId& L) {
  Integer base = squarefree_part(Rational(s));
  if (!L) return base;
  Integer other = squarefree_part(Rational(base * L->value()));
  return class_less(other, base) ? other : base;
}

std::optional<Integer> square_class_in_L(const Rational& q, const SquarefreeDisc& D) {
  Integer r = reduce_class(squarefree_part(q), D);
  if (r == 1) return std::nullopt;
  return r;
}

}  // namespace g5rp
