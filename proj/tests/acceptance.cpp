// One PASS/FAIL line per acceptance criterion. Exit status is 0 unless --strict is given
// and some criterion fails.
#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "g5rp/pipeline.hpp"
#include "g5rp/quartic.hpp"
#include "oracles.hpp"

using namespace g5rp;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> why;
  void need(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why.push_back(what);
    }
  }
};

Rational r(long n, long d = 1) { return Rational(n) / d; }

SelmerSet S(std::initializer_list<long> v) {
  SelmerSet s;
  for (long x : v) s.push_back(x);
  std::sort(s.begin(), s.end(), class_less);
  return s;
}

std::string tstr(std::vector<TValue> v) {
  std::sort(v.begin(), v.end(), tvalue_less);
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

std::string want_str(std::vector<std::string> v) {
  std::vector<TValue> t;
  for (auto& s : v) t.push_back(parse_tvalue(s));
  return tstr(t);
}

const TwistRow* find_row(const Certificate& c, long delta) {
  for (auto& r : c.rows)
    if (r.delta == delta) return &r;
  return nullptr;
}

void rows_match(Check& ck, const Certificate& c, const std::map<long, std::vector<std::string>>& want) {
  for (auto& [d, ts] : want) {
    auto row = find_row(c, d);
    if (!row) {
      ck.need(false, "no row for delta=" + std::to_string(d));
      continue;
    }
    std::string got = tstr(row->t), exp = want_str(ts);
    ck.need(got == exp, "delta=" + std::to_string(d) + " t=" + got + " expected " + exp);
  }
}

bool has_line(const std::vector<std::string>& v, const std::string& s) {
  for (auto& l : v)
    if (l.find(s) != std::string::npos) return true;
  return false;
}

Check criterion1() {
  Check ck;
  auto t0 = std::chrono::steady_clock::now();
  auto c = run(example("pell"));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  ck.need(c.j3 == 1 && c.j4 == 2, "(j3,j4)");
  ck.need(c.field == "Q(sqrt(10))", "L = " + c.field);
  ck.need(c.twists == S({1, -1, 2, -2, 3, -3, 6, -6}), "twists " + set_str(c.twists));
  ck.need(c.height == 1000, "height");
  rows_match(ck, c,
             {{-1, {"2"}}, {1, {"inf"}}, {2, {"-1"}}, {-2, {"4/3"}}, {3, {"-2"}}, {-3, {"3/2"}}, {6, {"0"}}, {-6, {"1"}}});
  ck.need(c.orbits == std::vector<Coords>{Coords(5, Rational(1)), Coords{1, 3, 5, 7, 9}}, "orbits");
  ck.need(has_line(c.interpretation, "d=1, m=0 degenerate"), "interpretation");
  ck.need(secs < 300, "runtime");
  return ck;
}

Check criterion2() {
  Check ck;
  auto c = run(example("edwards"));
  ck.need(c.j3 == 2 && c.j4 == 1, "(j3,j4)");
  ck.need(c.field == "Q(sqrt(-15))", "L = " + c.field);
  ck.need(c.twists == S({1, -1, 2, -2, 3, -3, 6, -6}), "twists " + set_str(c.twists));
  rows_match(ck, c,
             {{-1, {"4/5"}},
              {1, {"inf"}},
              {2, {"inf"}},
              {-2, {"inf"}},
              {3, {"inf"}},
              {-3, {"inf"}},
              {6, {"0"}},
              {-6, {"-1/5"}}});
  ck.need(c.orbits == std::vector<Coords>{Coords(5, Rational(1))}, "orbits");
  return ck;
}

Check criterion3() {
  Check ck;
  auto c = run(example("bremner"));
  ck.need(c.direct && c.direct->identities_ok && c.direct->identities.size() == 3, "identities");
  std::vector<std::string> fields{"Q(sqrt(30))", "Q(sqrt(35))", "Q(sqrt(42))"};
  ck.need(c.direct && c.direct->fields_p1 == fields && c.direct->fields_p2 == fields, "factorization fields");
  ck.need(c.j3 == 3 && c.j4 == 1, "(j3,j4)");
  ck.need(c.field == "Q(sqrt(7))", "L = " + c.field);
  ck.need(c.twists == S({1, 2, 3, 6}), "twists " + set_str(c.twists));
  auto r3 = find_row(c, 3);
  ck.need(r3 && (r3->emptiness.rfind("yes (local obstruction", 0) == 0 ||
                 (r3->emptiness.rfind("undecided", 0) == 0 && r3->emptiness.find("empty") != std::string::npos)),
          "delta=3 verdict");
  rows_match(ck, c, {{1, {"1", "inf"}}, {2, {"inf"}}, {6, {"0", "2"}}});
  for (auto xy : {"(x,y)=(1,0)", "(x,y)=(0,1)", "(x,y)=(1,1)", "(x,y)=(2,1)"})
    ck.need(has_line(c.interpretation, xy), std::string("class ") + xy);
  ck.need(c.interpretation.size() == 4, "exactly four (x,y) classes");
  return ck;
}

Check criterion4() {
  Check ck;
  auto c = run(example("flynn"));
  ck.need(c.reduced == QMatrix{{r(-1, 45), r(1, 270)}, {4, r(1, 3)}, {-2, r(1, 2)}}, "R_C");
  ck.need(c.j3 == 3, "j3");
  ck.need(c.field == "Q(sqrt(5))", "L = " + c.field);
  ck.need(c.twists == S({1, 2, 3, 6}), "twists " + set_str(c.twists));
  rows_match(ck, c, {{1, {"0", "inf"}}, {2, {"8/15", "16/5"}}});
  for (long d : {3L, 6L}) {
    auto row = find_row(c, d);
    ck.need(row && (row->emptiness.rfind("yes", 0) == 0 || row->emptiness.rfind("undecided", 0) == 0),
            "delta=" + std::to_string(d) + " verdict");
  }
  ck.need(c.orbits == std::vector<Coords>{Coords{3, 12, 18, 12, 1}}, "orbit");
  // direct search: only X = +-3 with W = 1, i.e. (+-3, +-12, +-18, +-12)
  auto sols = simultaneous_squares({QPoly({90, 0, 6}), QPoly({270, 0, 6}), QPoly({135, 0, 1})}, {1000, 1});
  bool only = sols.size() == 2;
  for (auto& s : sols)
    only = only && !s.t.inf && abs(s.t.t) == 3 && abs(s.witnesses[0].a()) == 12 && abs(s.witnesses[1].a()) == 18 &&
           abs(s.witnesses[2].a()) == 12;
  ck.need(only, "direct search solutions");
  return ck;
}

std::mt19937_64 gen(424242);
long rnd(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

Check criterion5() {
  Check ck;
  int flat = 0, done = 0;
  while (done < 200) {
    long u = rnd(-9, 9), v = rnd(-9, 9), w = rnd(-9, 9), x = rnd(-9, 9);
    if (done % 10 == 0) w = u;
    QPoly q = QPoly({v, u, 1}) * QPoly({x, w, 1});
    if (!is_separable(q)) continue;
    for (auto& b : rational_roots(cubic_resolvent(q))) {
      try {
        auto f = factor_over_quadratic(q, b);
        ck.need(f.p1 * f.p2 == to_lpoly(q), "p1 p2 = q for " + q.str());
        flat += f.delta2_zero;
      } catch (const MathError&) {
      }
    }
    ++done;
  }
  ck.need(flat >= 10, "Delta2 = 0 cases: " + std::to_string(flat));

  int special = 0;
  done = 0;
  while (done < 100) {
    std::array<Rational, 4> al;
    for (auto& a : al) a = rnd(-12, 12);
    if (done % 5 == 0) al[3] = al[0] + al[1] - al[2];
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) distinct = distinct && al[i] != al[j];
    if (!distinct) continue;
    auto sv = phi_special_values(al);
    bool on = sv.matches_map && sv.E.on_curve(sv.at_minus);
    for (auto& P : sv.at_roots) on = on && sv.E.on_curve(P);
    ck.need(on, "special values");
    for (int i = 2; i <= 4; ++i) {
      auto rep = shift_two_torsion(al, i);
      ck.need(rep.holds, "shift identity");
      special += rep.special;
    }
    ++done;
  }
  ck.need(special > 0, "gamma = 0 branch exercised");

  done = 0;
  while (done < 100) {
    std::array<Rational, 4> x;
    for (auto& v : x) {
      v = 0;
      while (v == 0) v = rnd(-6, 6);
    }
    Rational a = rnd(1, 7) * (rnd(0, 1) ? 1 : -1), c = rnd(1, 7) * (rnd(0, 1) ? 1 : -1);
    Rational b = (x[2] * x[2] - a * x[0] * x[0]) / (x[1] * x[1]);
    Rational d = (x[3] * x[3] - c * x[0] * x[0]) / (x[1] * x[1]);
    std::optional<DiagonalGenus1> C;
    try {
      C.emplace(a, b, c, d, x);
    } catch (const MathError&) {
      continue;
    }
    QCurve E = C->jacobian();
    auto rows = C->trivial_points();
    std::vector<QPoint> sums;
    // {P_i} = E[2] u (P4 + E[2]), as in the trivial-point table
    for (auto& T : two_torsion(E)) {
      sums.push_back(T);
      sums.push_back(E.add(rows[4].P, T));
    }
    bool ok = rows.size() == 8;
    for (auto& row : rows) {
      ok = ok && E.on_curve(row.P) && std::find(sums.begin(), sums.end(), row.P) != sums.end();
      if (!row.Q.at_infinity) ok = ok && row.Q.v * row.Q.v == C->quartic().eval(row.Q.u);
    }
    for (auto& s : sums) {
      bool hit = false;
      for (auto& row : rows) hit = hit || row.P == s;
      ok = ok && hit;
    }
    ck.need(ok, "trivial points");
    ++done;
  }
  return ck;
}

Check criterion6() {
  Check ck;
  const long primes[] = {2, 3, 5, 7, 11, 13};
  int agreed = 0, skipped = 0, yes = 0;
  while (agreed < 100) {
    long p = primes[rnd(0, 5)];
    std::vector<long> f{rnd(-50, 50), rnd(-50, 50), rnd(-50, 50), rnd(-50, 50), 0};
    while (f[4] == 0) f[4] = rnd(-12, 12);
    // bias toward p-divisible coefficients so both verdicts occur
    if (rnd(0, 1))
      for (int i = 0; i < 4; ++i) f[i] *= p;
    long c = 0;
    while (c == 0) c = rnd(-40, 40);
    QPoly F({f[0], f[1], f[2], f[3], f[4]});
    if (!is_separable(F)) continue;
    auto bf = oracle::brute_force_qp(c, f, p);
    if (bf == oracle::Verdict::unknown) {
      ++skipped;
      continue;
    }
    bool mine = has_Qp_point(c, F, p);
    bool theirs = bf == oracle::Verdict::yes;
    std::ostringstream os;
    os << "c=" << c << " f=" << F.str() << " p=" << p << " solver=" << mine << " brute=" << theirs;
    ck.need(mine == theirs, os.str());
    yes += theirs;
    ++agreed;
  }
  ck.need(yes > 0 && yes < agreed, "both verdicts exercised");
  if (ck.ok)
    ck.why.push_back("100 cases, " + std::to_string(yes) + " solvable, " + std::to_string(agreed - yes) +
                     " not; " + std::to_string(skipped) + " undetermined at p^6 skipped");
  return ck;
}

Check criterion7() {
  Check ck;
  for (auto& name : example_names()) {
    auto p = example(name);
    RunOptions one, four;
    one.workers = 1;
    four.workers = 4;
    auto a = certificate_to_json(run(p, one));
    auto b = certificate_to_json(run(p, four));
    ck.need(a == b, name + " certificates differ");
  }
  return ck;
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--strict") == 0) strict = true;
  Check (*crit[])() = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7};
  const char* names[] = {"pell reproduction",    "edwards reproduction", "bremner reproduction",
                         "flynn reproduction",   "quartic property suite", "local solver vs brute force",
                         "worker determinism"};
  int failed = 0;
  for (int i = 0; i < 7; ++i) {
    Check c;
    try {
      c = crit[i]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.why.push_back(std::string("exception: ") + e.what());
    }
    failed += !c.ok;
    std::cout << "criterion " << i + 1 << " (" << names[i] << "): " << (c.ok ? "PASS" : "FAIL");
    for (size_t k = 0; k < c.why.size(); ++k) std::cout << (k ? "; " : " - ") << c.why[k];
    std::cout << "\n";
  }
  std::cout << (7 - failed) << "/7 criteria pass\n";
  return strict && failed ? 1 : 0;
}
