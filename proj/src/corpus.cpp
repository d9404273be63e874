#include <sstream>

#include "g5rp/pipeline.hpp"
#include "g5rp/quartic.hpp"

namespace g5rp {

namespace {

QMatrix to_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix M;
  for (auto& r : rows) {
    std::vector<Rational> row;
    for (long v : r) row.emplace_back(v);
    M.push_back(row);
  }
  return M;
}

RankOracleEntry entry(long delta, const std::string& signs, std::vector<std::string> ts, const std::string& src) {
  RankOracleEntry e;
  e.delta = delta;
  e.signs = signs;
  e.rank = 1;
  for (auto& s : ts) e.t.push_back(parse_tvalue(s));
  e.source = src;
  return e;
}

RankOracleEntry empty_entry(long delta, const std::string& signs, const std::string& src) {
  RankOracleEntry e;
  e.delta = delta;
  e.signs = signs;
  e.empty = true;
  e.source = src;
  return e;
}

std::string qstr(const Rational& x) { return x.get_str(); }

}  // namespace

ProblemSpec build_pell(const Rational& a, const Rational& q) {
  if (q == 0) throw InputError("pell: q must be nonzero");
  ProblemSpec p;
  p.name = (a == 1 && q == 2) ? "pell" : "pell(" + qstr(a) + "," + qstr(q) + ")";
  p.variables = {"X1", "X2", "X3", "X4", "X5"};
  Rational z(0);
  p.matrix = {{2 * a + 3 * q, -4 * (a + q), 2 * a + q, z, z},
              {z, 2 * a + 5 * q, -(4 * a + 8 * q), 2 * a + 3 * q, z},
              {z, z, 2 * a + 7 * q, -(4 * a + 12 * q), 2 * a + 5 * q}};
  p.point = Coords(5, Rational(1));
  p.interpretation.kind = "pell";
  p.interpretation.a = a;
  p.interpretation.q = q;
  if (a == 1 && q == 2) {
    p.model.perm = Permutation::parse_cycles("(3 5)");
    p.model.j3 = 1;
    p.model.j4 = 2;
    const std::string src = "reference table, progression 1,3,5,7,9";
    p.oracle = {entry(-1, "+-", {"2"}, src), entry(1, "+-", {"inf"}, src),  entry(2, "+-", {"-1"}, src),
                entry(-2, "+-", {"4/3"}, src), entry(3, "++", {"-2"}, src), entry(-3, "++", {"3/2"}, src),
                entry(6, "++", {"0"}, src),  entry(-6, "++", {"1"}, src)};
    p.note = "squares in arithmetic progression on X^2 - d Y^2 = m with Y = 1,3,5,7,9";
  }
  return p;
}

ProblemSpec build_edwards() {
  ProblemSpec p;
  p.name = "edwards";
  p.variables = {"W", "z2", "z3", "z4", "z5"};
  p.matrix = to_matrix({{1, 4, 0, -5, 0}, {7, 25, 0, 0, -32}, {2, 0, 25, 0, -27}});
  p.point = Coords(5, Rational(1));
  p.model.perm = Permutation::parse_cycles("(1 4)(2 5)");
  p.model.j3 = 2;
  p.model.j4 = 1;
  p.interpretation.kind = "edwards";
  const std::string src = "reference table, Edwards progression 0,+-1,...,+-5";
  p.oracle = {entry(-1, "++", {"4/5"}, src), entry(1, "++", {"inf"}, src),  entry(2, "++", {"inf"}, src),
              entry(-2, "++", {"inf"}, src), entry(3, "++", {"inf"}, src),  entry(-3, "+-", {"inf"}, src),
              entry(6, "+-", {"0"}, src),    entry(-6, "+-", {"-1/5"}, src)};
  p.note = "x-coordinates 0, +-1, ..., +-5 on an Edwards curve";
  return p;
}

ProblemSpec build_bremner() {
  ProblemSpec p;
  p.name = "bremner";
  p.variables = {"z1", "z2", "z3", "z4", "z5"};
  p.matrix = to_matrix({{1, 1, -2, 0, 0}, {7, 5, 0, -12, 0}, {5, 7, 0, 0, -12}});
  p.point = Coords(5, Rational(1));
  p.model.perm = Permutation::parse_cycles("(2 4 3 5)");
  p.model.j3 = 3;
  p.model.j4 = 1;
  p.interpretation.kind = "bremner";
  BiquarticSpec b;
  b.p1 = QPoly({4, 40, -64, 20, 1});
  b.p2 = QPoly({4, -56, 80, -28, 1});
  b.columns = {{"p1", {}}, {"p2", {}}, {"", QPoly({2, -2, 1})}, {"", QPoly({-2, 0, 1})}, {"", QPoly({2, -4, 1})}};
  p.biquartic = b;
  const std::string src = "reference table, nine points in progression";
  p.oracle = {entry(1, "+-", {"1", "inf"}, src), entry(2, "++", {"inf"}, src), empty_entry(3, "++", src),
              entry(6, "++", {"0", "2"}, src)};
  p.note = "nine points in arithmetic progression on a two-parameter family";
  return p;
}

ProblemSpec build_flynn() {
  ProblemSpec p;
  p.name = "flynn";
  p.variables = {"Y1", "Y2", "Y3", "X", "W"};
  p.matrix = to_matrix({{1, 0, 0, -6, -90}, {0, 1, 0, -6, -270}, {0, 0, 1, -1, -135}});
  p.point = {Rational(12), Rational(18), Rational(12), Rational(3), Rational(1)};
  p.model.perm = Permutation::parse_cycles("(1 2 5)");
  p.model.j3 = 3;
  p.model.j4 = 1;
  p.display_order = {3, 0, 1, 2, 4};
  p.interpretation.kind = "flynn";
  RationalSystem s;
  s.variables = {"X", "W"};
  s.names = {"Y1", "Y2", "Y3"};
  s.polys = {QPoly({90, 0, 6}), QPoly({270, 0, 6}), QPoly({135, 0, 1})};
  p.system = s;
  const std::string src = "reference table, derived polynomials of type (3,1,1)";
  p.oracle = {entry(1, "++", {"0", "inf"}, src), entry(2, "+-", {"8/15", "16/5"}, src), empty_entry(3, "++", src),
              empty_entry(6, "++", src)};
  p.note = "Y1^2 = 6(X^2+15), Y2^2 = 6(X^2+45), Y3^2 = X^2+135";
  return p;
}

std::vector<std::string> example_names() { return {"pell", "edwards", "bremner", "flynn"}; }

ProblemSpec example(const std::string& name) {
  if (name == "pell") return build_pell(1, 2);
  if (name == "edwards") return build_edwards();
  if (name == "bremner") return build_bremner();
  if (name == "flynn") return build_flynn();
  throw InputError("unknown example '" + name + "' (try: g5rp examples list)");
}

namespace {

Coords integral(const Coords& X) { return normalize_projective(X); }

}  // namespace

std::string interpret_pell(const Coords& X0, const Rational& a, const Rational& q) {
  Coords X = integral(X0);
  std::ostringstream os;
  Rational den = q * (2 * a + q);
  if (den == 0) return "degenerate progression (q(2a+q) = 0)";
  Rational d = (X[1] * X[1] - X[0] * X[0]) / den;
  Rational m = X[0] * X[0] - d * a * a;
  os << "d=" << d << ", m=" << m;
  bool square = d >= 0 && rational_sqrt(d).has_value();
  if (d == 0 || m == 0 || square) {
    os << " degenerate";
    if (d == 0) os << " (d = 0)";
    else if (square) os << " (d is a square)";
    else os << " (m = 0)";
  } else {
    os << " admissible";
  }
  return os.str();
}

std::string interpret_edwards(const Coords& X0) {
  Coords X = integral(X0);
  const Rational &W = X[0], &z2 = X[1];
  if (W == 0) return "degenerate (W = 0)";
  for (int i = 1; i < 5; ++i)
    if (X[i] == 0) return "degenerate (y undefined)";
  Rational d = (3 * z2 * z2 / (W * W) + 1) / 4;
  std::ostringstream os;
  os << "d=" << d;
  if (d == 0 || d == 1) os << " excluded (d must differ from 0 and 1)";
  else os << " admissible";
  return os.str();
}

std::pair<Integer, Integer> bremner_xy(const Coords& Z) {
  const Rational &z3 = Z[2], &z4 = Z[3], &z5 = Z[4];
  Rational num = 2 * (z3 - z5), den = 2 * z3 - z4 - z5;
  Integer x, y;
  if (den == 0) {
    x = 1;
    y = 0;
  } else {
    Rational t = num / den;
    x = t.get_num();
    y = t.get_den();
  }
  if (x < 0 || (x == 0 && y < 0)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

std::pair<Integer, Integer> bremner_xy_of_t(const TValue& t) {
  if (t.inf) return {Integer(1), Integer(0)};
  Integer x = t.t.get_num(), y = t.t.get_den();
  if (x < 0) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

std::string interpret_bremner(const Coords& Z) {
  auto [x, y] = bremner_xy(Z);
  Integer core = x * x * y * y * (x - y) * (x - y) * (x - 2 * y) * (x - 2 * y);
  Integer s = x * x - 2 * x * y + 2 * y * y;
  Integer A = -252 * core, B = 324 * core * s * s;
  std::ostringstream os;
  os << "(x,y)=(" << x << "," << y << "), A=" << A << ", B=" << B;
  if (A == 0 || B == 0) os << " degenerate";
  return os.str();
}

std::string interpret_flynn(const Coords& X0) {
  Coords V = integral(X0);
  const Rational &X = V[3], &W = V[4];
  if (X + 3 * W == 0) return "a=infinity degenerate";
  Rational a = (X - 3 * W) / (X + 3 * W);
  std::ostringstream os;
  os << "a=" << a;
  if (a == 0 || a == 1) os << " degenerate";
  else os << " admissible";
  return os.str();
}

BiquarticModel generate_S_a(const Rational& a) {
  if (a == 0 || a == 1 || a == -1) throw InputError("S_a: a must differ from 0, 1, -1");
  Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a;
  Rational r4 = 9 * a2 + 18 * a + 9;
  Rational r3 = 14 * a3 + 10 * a2 + 10 * a + 14;
  Rational r2 = 9 * a4 - 10 * a3 - 6 * a2 - 10 * a + 9;
  Rational r1 = 18 * a4 - 10 * a3 - 10 * a2 + 18 * a;
  Rational r0 = 9 * a4 - 14 * a3 + 9 * a2;
  Rational s4 = 9 * a2 + 18 * a + 9;
  Rational s3 = 6 * a3 - 6 * a2 - 6 * a + 6;
  Rational s2 = 9 * a4 + 6 * a3 + 18 * a2 + 6 * a + 9;
  Rational s1 = 18 * a4 + 6 * a3 + 6 * a2 + 18 * a;
  Rational s0 = 9 * a4 - 6 * a3 + 9 * a2;
  QPoly R({r0, r1, r2, -r3, r4}), S({s0, s1, s2, -s3, s4});
  BiquarticModel m;
  m.p1 = monicize(R).monic;
  m.p2 = monicize(S).monic;
  m.provenance = "S_a fiber at a=" + a.get_str() + ", made monic by b -> s b with s^2 = 9(a+1)^2";
  m.validate();
  return m;
}

}  // namespace g5rp
