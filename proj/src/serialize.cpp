#include <json.hpp>
#include <set>

#include "g5rp/pipeline.hpp"

namespace g5rp {

using json = nlohmann::ordered_json;

namespace {

Rational parse_rational(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw InputError(where + ": expected a rational string");
    std::string s = j.get<std::string>();
    if (s.empty()) throw InputError(where + ": empty number");
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError(where + ": malformed rational '" + s + "'");
    if (q.get_den() == 0) throw InputError(where + ": zero denominator");
    q.canonicalize();
    return q;
  } catch (const json::exception& e) {
    throw InputError(where + ": " + e.what());
  }
}

json rat(const Rational& q) { return q.get_str(); }

json poly_json(const QPoly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(rat(c));
  return a;
}

QPoly parse_poly(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty coefficient list");
  std::vector<Rational> c;
  for (size_t i = 0; i < j.size(); ++i) c.push_back(parse_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return QPoly(c);
}

json coords_json(const Coords& X) {
  json a = json::array();
  for (auto& x : X) a.push_back(rat(x));
  return a;
}

json tvals(const std::vector<TValue>& ts) {
  json a = json::array();
  for (auto& t : ts) a.push_back(t.str());
  return a;
}

json set_json(const SelmerSet& s) {
  json a = json::array();
  for (auto& x : s) a.push_back(x.get_str());
  return a;
}

void check_signs(const std::string& s, const std::string& where) {
  if (s.size() != 2 || (s[0] != '+' && s[0] != '-') || (s[1] != '+' && s[1] != '-'))
    throw InputError(where + ": signs must be one of ++, +-, -+, --");
}

RankOracleEntry parse_oracle_entry(const json& e, const std::string& where) {
  if (!e.is_object()) throw InputError(where + ": expected an object");
  RankOracleEntry r;
  if (!e.contains("delta")) throw InputError(where + ": missing delta");
  r.delta = parse_rational(e["delta"], where + ".delta");
  if (r.delta == 0) throw InputError(where + ": delta must be nonzero");
  if (e.contains("signs")) {
    r.signs = e["signs"].get<std::string>();
    check_signs(r.signs, where + ".signs");
  }
  if (e.contains("rank") && !e["rank"].is_null()) {
    int k = e["rank"].get<int>();
    if (k < 0) throw InputError(where + ": rank must be >= 0");
    r.rank = k;
  }
  if (e.contains("empty")) r.empty = e["empty"].get<bool>();
  if (e.contains("t"))
    for (auto& t : e["t"]) {
      try {
        r.t.push_back(parse_tvalue(t.get<std::string>()));
      } catch (const std::exception& ex) {
        throw InputError(where + ".t: " + ex.what());
      }
    }
  if (e.contains("source")) r.source = e["source"].get<std::string>();
  return r;
}

json oracle_json(const RankOracleEntry& e) {
  json o;
  o["delta"] = rat(e.delta);
  o["signs"] = e.signs;
  if (e.rank) o["rank"] = *e.rank;
  if (e.empty) o["empty"] = true;
  if (!e.t.empty()) o["t"] = tvals(e.t);
  if (!e.source.empty()) o["source"] = e.source;
  return o;
}

const char* kind_str(ProblemKind k) {
  switch (k) {
    case ProblemKind::matrix: return "matrix";
    case ProblemKind::reduced: return "reduced";
    case ProblemKind::biquartic: return "biquartic";
  }
  return "matrix";
}

}  // namespace

ProblemSpec problem_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("problem file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("problem file must be a JSON object");
  ProblemSpec p;
  try {
    if (!j.contains("format")) throw InputError("missing \"format\"");
    p.format = j["format"].get<int>();
    if (p.format != 1) throw InputError("unsupported format " + std::to_string(p.format));
    p.name = j.value("name", std::string("problem"));
    std::string kind = j.value("kind", std::string("matrix"));
    if (kind == "matrix") p.kind = ProblemKind::matrix;
    else if (kind == "reduced") p.kind = ProblemKind::reduced;
    else if (kind == "biquartic") p.kind = ProblemKind::biquartic;
    else throw InputError("unknown kind '" + kind + "'");
    if (j.contains("variables"))
      for (auto& v : j["variables"]) p.variables.push_back(v.get<std::string>());
    if (j.contains("matrix")) {
      if (!j["matrix"].is_array()) throw InputError("matrix must be a list of rows");
      for (size_t r = 0; r < j["matrix"].size(); ++r) {
        std::vector<Rational> row;
        auto& jr = j["matrix"][r];
        if (!jr.is_array()) throw InputError("matrix row must be a list");
        for (size_t c = 0; c < jr.size(); ++c)
          row.push_back(parse_rational(jr[c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        p.matrix.push_back(row);
      }
    }
    if (j.contains("point"))
      for (size_t i = 0; i < j["point"].size(); ++i)
        p.point.push_back(parse_rational(j["point"][i], "point[" + std::to_string(i) + "]"));
    if (j.contains("model")) {
      auto& m = j["model"];
      if (m.contains("permutation")) {
        try {
          p.model.perm = Permutation::parse_cycles(m["permutation"].get<std::string>());
        } catch (const MathError& e) {
          throw InputError(std::string("model.permutation: ") + e.what());
        }
      }
      p.model.index = m.value("index", 0);
      p.model.j3 = m.value("j3", 0);
      p.model.j4 = m.value("j4", 0);
    }
    p.height = j.value("height", 1000L);
    p.prime_bound = j.value("prime_bound", 100L);
    if (j.contains("display_order"))
      for (auto& v : j["display_order"]) p.display_order.push_back(v.get<int>());
    if (j.contains("interpretation")) {
      auto& in = j["interpretation"];
      p.interpretation.kind = in.value("kind", std::string());
      if (in.contains("a")) p.interpretation.a = parse_rational(in["a"], "interpretation.a");
      if (in.contains("q")) p.interpretation.q = parse_rational(in["q"], "interpretation.q");
      static const std::set<std::string> known{"", "pell", "edwards", "bremner", "flynn"};
      if (!known.count(p.interpretation.kind)) throw InputError("unknown interpretation '" + p.interpretation.kind + "'");
    }
    if (j.contains("biquartic")) {
      auto& b = j["biquartic"];
      BiquarticSpec bs;
      bs.p1 = parse_poly(b.at("p1"), "biquartic.p1");
      bs.p2 = parse_poly(b.at("p2"), "biquartic.p2");
      if (b.contains("columns"))
        for (auto& c : b["columns"]) {
          ColumnValue cv;
          if (c.is_string()) {
            cv.quartic = c.get<std::string>();
            if (cv.quartic != "p1" && cv.quartic != "p2") throw InputError("biquartic.columns: expected p1, p2 or {square_of}");
          } else {
            cv.root = parse_poly(c.at("square_of"), "biquartic.columns.square_of");
          }
          bs.columns.push_back(cv);
        }
      p.biquartic = bs;
    }
    if (j.contains("system")) {
      auto& s = j["system"];
      RationalSystem rs;
      rs.variables.clear();
      for (auto& v : s.at("variables")) rs.variables.push_back(v.get<std::string>());
      if (rs.variables.size() != 2) throw InputError("system.variables must name numerator and denominator");
      for (auto& v : s.at("names")) rs.names.push_back(v.get<std::string>());
      for (auto& f : s.at("polys")) rs.polys.push_back(parse_poly(f, "system.polys"));
      if (rs.names.size() != rs.polys.size()) throw InputError("system.names and system.polys differ in length");
      p.system = rs;
    }
    if (j.contains("oracle"))
      for (size_t i = 0; i < j["oracle"].size(); ++i)
        p.oracle.push_back(parse_oracle_entry(j["oracle"][i], "oracle[" + std::to_string(i) + "]"));
    p.note = j.value("note", std::string());
  } catch (const json::exception& e) {
    throw InputError(std::string("problem file: ") + e.what());
  }
  p.validate();
  return p;
}

std::vector<RankOracleEntry> oracle_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("oracle file is not valid JSON: ") + e.what());
  }
  try {
    if (j.is_object()) {
      if (j.value("format", 0) != 1) throw InputError("oracle file: missing or unsupported \"format\"");
      j = j.at("entries");
    }
    if (!j.is_array()) throw InputError("oracle file: expected a list of entries");
    std::vector<RankOracleEntry> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(parse_oracle_entry(j[i], "entries[" + std::to_string(i) + "]"));
    return out;
  } catch (const json::exception& e) {
    throw InputError(std::string("oracle file: ") + e.what());
  }
}

std::string problem_to_json(const ProblemSpec& p) {
  json j;
  j["format"] = p.format;
  j["name"] = p.name;
  j["kind"] = kind_str(p.kind);
  if (!p.note.empty()) j["note"] = p.note;
  if (!p.variables.empty()) j["variables"] = p.variables;
  if (!p.matrix.empty()) {
    json m = json::array();
    for (auto& r : p.matrix) m.push_back(coords_json(r));
    j["matrix"] = m;
  }
  if (!p.point.empty()) j["point"] = coords_json(p.point);
  json model = json::object();
  if (p.model.perm) model["permutation"] = p.model.perm->cycles();
  if (p.model.index) model["index"] = p.model.index;
  if (p.model.j3) model["j3"] = p.model.j3;
  if (p.model.j4) model["j4"] = p.model.j4;
  if (!model.empty()) j["model"] = model;
  j["height"] = p.height;
  j["prime_bound"] = p.prime_bound;
  if (!p.display_order.empty()) j["display_order"] = p.display_order;
  if (!p.interpretation.kind.empty()) {
    json in;
    in["kind"] = p.interpretation.kind;
    if (p.interpretation.kind == "pell") {
      in["a"] = rat(p.interpretation.a);
      in["q"] = rat(p.interpretation.q);
    }
    j["interpretation"] = in;
  }
  if (p.biquartic) {
    json b;
    b["p1"] = poly_json(p.biquartic->p1);
    b["p2"] = poly_json(p.biquartic->p2);
    if (!p.biquartic->columns.empty()) {
      json cols = json::array();
      for (auto& c : p.biquartic->columns) {
        if (!c.quartic.empty()) cols.push_back(c.quartic);
        else cols.push_back(json{{"square_of", poly_json(c.root)}});
      }
      b["columns"] = cols;
    }
    j["biquartic"] = b;
  }
  if (p.system) {
    json s;
    s["variables"] = p.system->variables;
    s["names"] = p.system->names;
    json ps = json::array();
    for (auto& f : p.system->polys) ps.push_back(poly_json(f));
    s["polys"] = ps;
    j["system"] = s;
  }
  if (!p.oracle.empty()) {
    json o = json::array();
    for (auto& e : p.oracle) o.push_back(oracle_json(e));
    j["oracle"] = o;
  }
  return j.dump(2) + "\n";
}

std::string certificate_to_json(const Certificate& c) {
  json j;
  j["format"] = c.format;
  j["name"] = c.name;
  j["height"] = c.height;
  j["prime_bound"] = c.prime_bound;
  if (!c.field.empty()) {
    json m;
    m["permutation"] = c.permutation;
    m["index"] = c.model_index;
    m["j3"] = c.j3;
    m["j4"] = c.j4;
    j["model"] = m;
    json R = json::array();
    for (auto& r : c.reduced) R.push_back(coords_json(r));
    j["reduced_matrix"] = R;
    j["model_point"] = coords_json(c.model_point);
    j["field"] = c.field;
    j["p3"] = poly_json(c.p3);
    j["p4"] = poly_json(c.p4);
    json s;
    s["E3"] = set_json(c.selmer3);
    s["E4"] = set_json(c.selmer4);
    s["trivial_images"] = set_json(c.trivial_images);
    s["E3_modulo_trivial"] = set_json(c.quotient3);
    j["selmer"] = s;
    j["twists"] = set_json(c.twists);
    json rows = json::array();
    for (auto& r : c.rows) {
      json jr;
      jr["delta"] = r.delta.get_str();
      jr["chosen_signs"] = r.chosen_signs;
      jr["evidence"] = r.evidence;
      jr["empty"] = r.emptiness;
      jr["rank"] = r.rank;
      jr["t"] = tvals(r.t);
      json pts = json::array();
      for (auto& X : r.points) pts.push_back(X.empty() ? json(nullptr) : coords_json(X));
      jr["points"] = pts;
      bool any = false;
      for (auto& e : r.extra) any = any || !e.empty();
      if (any) jr["extra"] = r.extra;
      jr["oracle_t_found"] = r.oracle_t_found;
      json cases = json::array();
      for (auto& sc : r.cases) {
        json jc;
        jc["signs"] = sc.signs;
        jc["t"] = tvals(sc.t);
        jc["evidence"] = sc.evidence;
        if (!sc.place.empty()) jc["place"] = sc.place;
        if (!sc.undecided_places.empty()) jc["undecided_places"] = sc.undecided_places;
        cases.push_back(jc);
      }
      jr["cases"] = cases;
      rows.push_back(jr);
    }
    j["rows"] = rows;
    json orbits = json::array();
    for (auto& X : c.orbits) orbits.push_back(coords_json(X));
    j["orbits"] = orbits;
    j["interpretation"] = c.interpretation;
  }
  if (c.direct) {
    json d;
    d["kind"] = c.direct->kind;
    d["solutions"] = c.direct->solutions;
    if (!c.direct->identities.empty()) {
      d["identities"] = c.direct->identities;
      d["identities_ok"] = c.direct->identities_ok;
    }
    if (!c.direct->fields_p1.empty()) {
      d["fields_p1"] = c.direct->fields_p1;
      d["fields_p2"] = c.direct->fields_p2;
    }
    j["direct_search"] = d;
  }
  j["completeness"] = c.completeness;
  j["undecided"] = c.undecided;
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

std::string biquartic_to_json(const BiquarticModel& m, const Rational& a) {
  json j;
  j["format"] = 1;
  j["name"] = "S_a(" + a.get_str() + ")";
  j["kind"] = "biquartic";
  j["note"] = m.provenance;
  j["biquartic"] = {{"p1", poly_json(m.p1)}, {"p2", poly_json(m.p2)}};
  j["height"] = 1000;
  return j.dump(2) + "\n";
}

}  // namespace g5rp
