#include "g5rp/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "g5rp/quartic.hpp"

namespace g5rp {

void ProblemSpec::validate() const {
  if (format != 1) throw InputError("unsupported format " + std::to_string(format));
  if (height < 1) throw InputError("height must be >= 1");
  if (prime_bound < 0) throw InputError("prime_bound must be >= 0");
  if (kind == ProblemKind::biquartic) {
    if (!biquartic) throw InputError("biquartic problem without polynomials");
    return;
  }
  size_t cols = kind == ProblemKind::matrix ? 5 : 2;
  if (matrix.size() != 3) throw InputError("matrix must have 3 rows");
  for (auto& r : matrix)
    if (r.size() != cols) throw InputError("matrix rows must have " + std::to_string(cols) + " entries");
  if (point.size() != 5) throw InputError("point must have 5 coordinates");
  if (!display_order.empty()) {
    std::vector<int> s = display_order;
    std::sort(s.begin(), s.end());
    if (s != std::vector<int>{0, 1, 2, 3, 4}) throw InputError("display_order must be a permutation of 0..4");
  }
  if (model.index < 0 || model.index > 10) throw InputError("model index must be in 1..10");
  if (model.j3 < 0 || model.j3 > 3 || model.j4 < 0 || model.j4 > 3) throw InputError("j3, j4 must be in 1..3");
  if (biquartic && !biquartic->columns.empty() && biquartic->columns.size() != 5)
    throw InputError("biquartic columns must have 5 entries");
}

namespace {

const char* kSigns[4] = {"++", "+-", "-+", "--"};

int sign_of_char(char c) { return c == '-' ? -1 : 1; }

Coords display(const Coords& X, const std::vector<int>& order) {
  if (order.empty()) return X;
  Coords Y;
  for (int i : order) Y.push_back(X[i]);
  return Y;
}

std::string tlist(const std::vector<TValue>& ts) {
  std::string s;
  for (size_t i = 0; i < ts.size(); ++i) s += (i ? "," : "") + ts[i].str();
  return s.empty() ? "-" : s;
}

std::vector<Integer> bad_primes(const Rational& delta, const CoveringCase& cc, const LPoly& f, const QPoly& p3,
                                const QPoly& p4, const LPoly& a, const LPoly& b) {
  std::set<Integer> ps{2};
  auto add = [&](const Rational& q) {
    if (q == 0) return;
    for (auto& p : prime_divisors(q)) ps.insert(p);
  };
  add(delta);
  if (cc.field) add(Rational(cc.field->value()));
  add(discriminant(p3));
  add(discriminant(p4));
  add(resultant(a, b).norm());
  for (auto& c : f.coeffs()) {
    add(Rational(c.a().get_den()));
    add(Rational(c.b().get_den()));
  }
  return {ps.begin(), ps.end()};
}

}  // namespace

DiagonalGenus5 build_curve(const ProblemSpec& p, const ModelSpec& m, int* index_out) {
  if (p.kind == ProblemKind::reduced) {
    if (index_out) *index_out = 0;
    return DiagonalGenus5(p.matrix, p.point);
  }
  if (p.kind != ProblemKind::matrix) throw InputError("problem has no diagonal model");
  auto models = models_enumerate(p.matrix);
  if (m.perm) {
    if (index_out) {
      *index_out = 0;
      for (auto& mc : models)
        if (mc.perm == *m.perm) *index_out = mc.index;
    }
    return DiagonalGenus5::from_matrix(p.matrix, p.point, *m.perm);
  }
  if (m.index > 0) {
    for (auto& mc : models)
      if (mc.index == m.index) {
        if (index_out) *index_out = mc.index;
        return DiagonalGenus5::from_matrix(p.matrix, p.point, mc.perm);
      }
    throw InputError("model index " + std::to_string(m.index) + " is not available for this matrix");
  }
  std::string why;
  for (auto& mc : models) {
    try {
      auto C = DiagonalGenus5::from_matrix(p.matrix, p.point, mc.perm);
      if (!C.default_indices()) continue;
      if (index_out) *index_out = mc.index;
      return C;
    } catch (const MathError& e) {
      why = e.what();
    }
  }
  throw MathError("no model with a factorization pair over a field of degree <= 2" + (why.empty() ? "" : ": " + why));
}

namespace {

std::pair<int, int> choose_indices(const DiagonalGenus5& C, int j3, int j4) {
  if (j3 && j4) return {j3, j4};
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      if ((j3 && a != j3) || (j4 && b != j4)) continue;
      if (composite_field(C.factor3(a).field, C.factor4(b).field)) return {a, b};
    }
  std::ostringstream os;
  os << "no (j3,j4) with [L:Q] <= 2; fields:";
  for (int a = 1; a <= 3; ++a) os << " alpha3," << a << " in " << field_name(C.factor3(a).field) << ";";
  for (int b = 1; b <= 3; ++b) os << " alpha4," << b << " in " << field_name(C.factor4(b).field) << ";";
  throw MathError(os.str());
}

std::string poly_term(const Rational& c, const std::string& what) {
  std::ostringstream os;
  os << c << "*" << what;
  return os.str();
}

DirectCheck run_direct(const ProblemSpec& p, const SearchOptions& so) {
  DirectCheck d;
  if (p.biquartic) {
    d.kind = "biquartic";
    auto& b = *p.biquartic;
    for (auto& fp : rational_points_biquartic({b.p1, b.p2, ""}, so)) d.solutions.push_back("t=" + fp.t.str());
    for (auto& f : factorization_fields(b.p1)) d.fields_p1.push_back(field_name(f.field));
    for (auto& f : factorization_fields(b.p2)) d.fields_p2.push_back(field_name(f.field));
    std::sort(d.fields_p1.begin(), d.fields_p1.end());
    std::sort(d.fields_p2.begin(), d.fields_p2.end());
    if (!b.columns.empty() && p.kind == ProblemKind::matrix) {
      for (size_t r = 0; r < p.matrix.size(); ++r) {
        QPoly sum;
        std::string text;
        for (size_t i = 0; i < 5; ++i) {
          const Rational& c = p.matrix[r][i];
          if (c == 0) continue;
          auto& col = b.columns[i];
          QPoly v;
          std::string name;
          if (col.quartic == "p1") {
            v = b.p1;
            name = "p1";
          } else if (col.quartic == "p2") {
            v = b.p2;
            name = "p2";
          } else {
            v = col.root * col.root;
            name = "(" + col.root.str() + ")^2";
          }
          sum = sum + v.scaled(c);
          text += (text.empty() ? "" : " + ") + poly_term(c, name);
        }
        bool ok = sum.is_zero();
        d.identities_ok = d.identities_ok && ok;
        d.identities.push_back(text + " = 0 " + (ok ? "verified" : "FAILED"));
      }
    }
  } else if (p.system) {
    d.kind = "system";
    auto& s = *p.system;
    for (auto& fp : simultaneous_squares(s.polys, so)) {
      Integer m = fp.t.inf ? Integer(1) : fp.t.t.get_num();
      Integer n = fp.t.inf ? Integer(0) : fp.t.t.get_den();
      std::ostringstream os;
      os << "(" << s.variables[0];
      for (auto& nm : s.names) os << "," << nm;
      os << ")=(" << m;
      for (auto& w : fp.witnesses) os << "," << w.a() * Rational(n);
      os << ") with " << s.variables[1] << "=" << n;
      d.solutions.push_back(os.str());
    }
  }
  return d;
}

}  // namespace

Certificate run(const ProblemSpec& problem, const RunOptions& opt) {
  problem.validate();
  Certificate cert;
  cert.name = problem.name;
  cert.height = opt.height.value_or(problem.height);
  cert.prime_bound = opt.prime_bound.value_or(problem.prime_bound);
  if (cert.height < 1) throw InputError("height must be >= 1");
  SearchOptions so{cert.height, std::max(1, opt.workers)};

  if (problem.biquartic || problem.system) cert.direct = run_direct(problem, so);
  if (problem.kind == ProblemKind::biquartic) {
    cert.completeness = "search-only";
    return cert;
  }

  ModelSpec ms = opt.model.value_or(problem.model);
  int index = 0;
  DiagonalGenus5 C = build_curve(problem, ms, &index);
  auto [j3, j4] = choose_indices(C, ms.j3, ms.j4);
  CoveringCase cc = C.covering(j3, j4);
  const FieldId& L = cc.field;
  cert.permutation = C.permutation().cycles();
  cert.model_index = index;
  cert.j3 = j3;
  cert.j4 = j4;
  cert.reduced = C.R();
  cert.model_point = C.P0();
  cert.field = field_name(L);
  cert.p3 = C.p3();
  cert.p4 = C.p4();

  QCurve E3 = cc.f3.jacobian(), E4 = cc.f4.jacobian();
  auto D3 = IsogenyDescentProblem::at_torsion(E3, cc.f3.torsion.x);
  auto D4 = IsogenyDescentProblem::at_torsion(E4, cc.f4.torsion.x);
  auto rep3 = isogeny_selmer_report(D3, 0);
  auto rep4 = isogeny_selmer_report(D4, 0);
  for (auto& s : rep3.diagnostics) cert.notes.push_back("E3: " + s);
  for (auto& s : rep4.diagnostics) cert.notes.push_back("E4: " + s);
  cert.selmer3 = rep3.set;
  cert.selmer4 = rep4.set;
  SelmerSet triv;
  for (auto& row : C.g3().trivial_points()) {
    QPoint P = row.P;
    if (!P.inf) P.x -= cc.f3.torsion.x;
    triv.push_back(descent_image(D3, P));
  }
  cert.trivial_images = image_in_L(triv, L);
  cert.quotient3 = quotient_by_trivial(rep3.set, triv, L);
  cert.twists = twist_products(cert.quotient3, image_in_L(rep4.set, L), L);

  std::vector<HCase> cases;
  for (auto& d : cert.twists)
    for (auto s : kSigns) cases.push_back({Rational(d), sign_of_char(s[0]), sign_of_char(s[1])});
  auto found = points_on_H_over_L(cc, cases, so);

  std::vector<RankOracleEntry> oracle = problem.oracle;
  for (auto& e : opt.extra_oracle) oracle.push_back(e);

  std::vector<Coords> orbit_points;
  std::set<std::pair<Integer, Integer>> bremner_classes;
  bool all_obstructed = true, oracle_ok = true;

  for (size_t k = 0; k < cert.twists.size(); ++k) {
    TwistRow row;
    row.delta = cert.twists[k];
    const RankOracleEntry* oe = nullptr;
    for (auto& e : oracle)
      if (reduce_class(squarefree_part(e.delta), L) == row.delta) {
        oe = &e;
        break;
      }
    for (int s = 0; s < 4; ++s) {
      auto& res = found[4 * k + s];
      SignCase sc;
      sc.signs = kSigns[s];
      for (auto& fp : res.points) sc.t.push_back(fp.t);
      row.cases.push_back(sc);
    }
    if (oe) {
      row.chosen_signs = oe->signs;
    } else {
      row.chosen_signs = "++";
      for (auto& sc : row.cases)
        if (!sc.t.empty()) {
          row.chosen_signs = sc.signs;
          break;
        }
    }
    for (int s = 0; s < 4; ++s) {
      auto& sc = row.cases[s];
      if (!sc.t.empty()) {
        sc.evidence = "found-point";
        continue;
      }
      if (sc.signs != row.chosen_signs) {
        sc.evidence = "not-checked";
        continue;
      }
      LPoly a = sc.signs[0] == '+' ? cc.f3.plus : cc.f3.minus;
      LPoly b = sc.signs[1] == '+' ? cc.f4.plus : cc.f4.minus;
      LPoly f = a * b;
      Rational delta(row.delta);
      auto primes = bad_primes(delta, cc, f, cert.p3, cert.p4, a, b);
      auto v = locally_solvable_everywhere(delta, f, L, primes, cert.prime_bound);
      if (v.result == Tri::no) {
        sc.evidence = "local-obstruction";
        sc.place = v.place;
      } else if (v.result == Tri::yes) {
        sc.evidence = "locally-solvable";
      } else {
        sc.evidence = "undecided";
      }
      sc.undecided_places = v.undecided;
    }
    const SignCase* chosen = nullptr;
    for (auto& sc : row.cases)
      if (sc.signs == row.chosen_signs) chosen = &sc;
    row.evidence = chosen->evidence;
    row.t = chosen->t;
    if (row.evidence != "local-obstruction") all_obstructed = false;
    if (row.evidence == "found-point") {
      row.emptiness = "no";
    } else if (row.evidence == "local-obstruction") {
      row.emptiness = "yes (local obstruction at " + chosen->place + ")";
    } else {
      row.emptiness = "undecided";
      if (row.evidence == "locally-solvable") row.emptiness += " (locally solvable, no points found)";
      if (oe && oe->empty) row.emptiness += " (oracle: empty)";
    }
    if (row.evidence == "undecided") cert.undecided = true;
    if (oe && oe->rank) row.rank = std::to_string(*oe->rank) + " (assumed, oracle)";
    else if (oe && oe->empty) row.rank = "- (oracle: empty)";
    else row.rank = "-";

    for (auto& t : row.t) {
      auto X = C.from_biquartic(t);
      if (!X) {
        row.points.push_back({});
        row.extra.push_back("no rational preimage");
        continue;
      }
      Coords orig = C.to_original(*X);
      if (!C.on_original(orig)) throw MathError("pulled back point fails the original model");
      auto rep = pullback_to_C(C, t);
      row.points.push_back(display(*rep, problem.display_order));
      if (problem.interpretation.kind == "bremner") {
        auto xy = bremner_xy_of_t(t);
        row.extra.push_back("(" + xy.first.get_str() + "," + xy.second.get_str() + ")");
      } else {
        row.extra.push_back("");
      }
    }
    // every found t on any sign choice contributes points
    for (auto& sc : row.cases)
      for (auto& t : sc.t)
        if (auto rep = pullback_to_C(C, t)) orbit_points.push_back(*rep);

    if (oe) {
      for (auto& t : oe->t)
        if (std::find(row.t.begin(), row.t.end(), t) == row.t.end()) row.oracle_t_found = false;
    }
    bool solvable = row.evidence != "local-obstruction";
    if (solvable) {
      bool has = oe && ((oe->rank && *oe->rank < (L ? 2 : 1)) || oe->empty);
      if (!has || !row.oracle_t_found) oracle_ok = false;
    }
    cert.rows.push_back(std::move(row));
  }

  // the trivial orbit is always present
  orbit_points.push_back(orbit_representative(C.to_original(C.P0())));
  for (auto& X : orbit_normalize(orbit_points)) {
    if (!C.on_original(X)) throw MathError("orbit representative fails the original model");
    cert.orbits.push_back(X);
  }

  const auto& ik = problem.interpretation;
  if (ik.kind == "bremner") {
    std::vector<std::pair<std::pair<Integer, Integer>, std::string>> lines;
    for (auto& X : cert.orbits)
      for (auto& g : SignGroupElement::all()) {
        Coords Y = g.apply(X);
        auto xy = bremner_xy(Y);
        if (bremner_classes.insert(xy).second) lines.push_back({xy, interpret_bremner(Y)});
      }
    std::sort(lines.begin(), lines.end());
    for (auto& l : lines) cert.interpretation.push_back(l.second);
  } else {
    for (auto& X : cert.orbits) {
      std::string head = coords_str(display(X, problem.display_order)) + ": ";
      if (ik.kind == "pell") {
        cert.interpretation.push_back(head + interpret_pell(X, ik.a, ik.q));
      } else if (ik.kind == "edwards") {
        cert.interpretation.push_back(head + interpret_edwards(X));
      } else if (ik.kind == "flynn") {
        Coords Y = X;
        cert.interpretation.push_back(head + interpret_flynn(Y));
        Y[3] = -Y[3];
        cert.interpretation.push_back(head + "with X negated: " + interpret_flynn(Y));
      }
    }
  }
  for (auto& X : cert.orbits) X = display(X, problem.display_order);

  if (all_obstructed) cert.completeness = "unconditional-verified-subset";
  else if (oracle_ok) cert.completeness = "conditional-on-chabauty";
  else cert.completeness = "search-only";
  return cert;
}

std::string table_text(const Certificate& c, const ProblemSpec& p) {
  std::ostringstream os;
  bool xy = p.interpretation.kind == "bremner";
  os << c.name << ": model " << (c.permutation.empty() ? "(reduced input)" : c.permutation) << ", (j3,j4) = (" << c.j3
     << "," << c.j4 << "), L = " << c.field << "\n";
  os << "R_C = [";
  for (size_t i = 0; i < c.reduced.size(); ++i)
    os << (i ? "; " : "") << c.reduced[i][0] << ", " << c.reduced[i][1];
  os << "]\n";
  os << "twists = " << set_str(c.twists) << "\n";
  os << "delta | signs | empty? | rank | t | P" << (xy ? " | +-(x,y)" : "") << "\n";
  for (auto& r : c.rows) {
    std::string pts;
    std::set<std::string> seen;
    for (auto& X : r.points) {
      std::string s = X.empty() ? "none" : coords_str(X);
      if (seen.insert(s).second) pts += (pts.empty() ? "" : ",") + s;
    }
    os << r.delta << " | (" << r.chosen_signs[0] << "," << r.chosen_signs[1] << ") | " << r.emptiness << " | " << r.rank
       << " | " << tlist(r.t) << " | " << (pts.empty() ? "-" : pts);
    if (xy) {
      std::string e;
      for (auto& s : r.extra) e += (e.empty() ? "" : ",") + s;
      os << " | " << (e.empty() ? "-" : e);
    }
    os << "\n";
  }
  os << "orbits:";
  for (auto& X : c.orbits) os << " " << coords_str(X);
  os << "\n";
  for (auto& s : c.interpretation) os << "  " << s << "\n";
  if (c.direct) {
    os << "direct " << c.direct->kind << " search up to height " << c.height << ":";
    for (auto& s : c.direct->solutions) os << " " << s;
    os << "\n";
    for (auto& s : c.direct->identities) os << "  " << s << "\n";
    if (!c.direct->fields_p1.empty()) {
      os << "  factorization fields p1:";
      for (auto& f : c.direct->fields_p1) os << " " << f;
      os << "; p2:";
      for (auto& f : c.direct->fields_p2) os << " " << f;
      os << "\n";
    }
  }
  os << "completeness: " << c.completeness << " (height " << c.height << ")\n";
  return os.str();
}

}  // namespace g5rp
