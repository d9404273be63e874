#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g5rp/descent.hpp"
#include "g5rp/localsolve.hpp"
#include "g5rp/search.hpp"

namespace g5rp {

// Bad user input (exit code 3 in the CLI).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankOracleEntry {
  Rational delta;
  std::string signs = "++";
  std::optional<int> rank;
  bool empty = false;           // asserted emptiness of the quotient
  std::vector<TValue> t;        // t-values the quotient is expected to contain
  std::string source;
};

enum class ProblemKind { matrix, reduced, biquartic };

struct ModelSpec {
  std::optional<Permutation> perm;
  int index = 0;  // 1..10 into models_enumerate, 0 = unset
  int j3 = 0, j4 = 0;  // 0 = default choice
};

// z_i^2 as a polynomial in t: either a named quartic ("p1", "p2") or the square of a polynomial.
struct ColumnValue {
  std::string quartic;
  QPoly root;
};

struct BiquarticSpec {
  QPoly p1, p2;
  std::vector<ColumnValue> columns;  // optional link to the diagonal matrix
};

// Simultaneous squares y_i^2 = f_i(t) with t = variables[0] / variables[1].
struct RationalSystem {
  std::vector<std::string> variables{"t", "1"};
  std::vector<std::string> names;
  std::vector<QPoly> polys;
};

struct Interpretation {
  std::string kind;  // "", "pell", "edwards", "bremner", "flynn"
  Rational a = 1, q = 2;
};

struct ProblemSpec {
  int format = 1;
  std::string name;
  ProblemKind kind = ProblemKind::matrix;
  std::vector<std::string> variables;
  QMatrix matrix;  // 3x5 for matrix, 3x2 for reduced
  Coords point;
  ModelSpec model;
  long height = 1000;
  long prime_bound = 100;
  std::vector<int> display_order;  // output coordinate i is original coordinate display_order[i]
  Interpretation interpretation;
  std::optional<BiquarticSpec> biquartic;
  std::optional<RationalSystem> system;
  std::vector<RankOracleEntry> oracle;
  std::string note;

  void validate() const;  // throws InputError
};

struct SignCase {
  std::string signs;
  std::vector<TValue> t;
  std::string evidence;  // found-point | local-obstruction | locally-solvable | undecided
  std::string place;
  std::vector<std::string> undecided_places;
};

struct TwistRow {
  Integer delta;
  std::string chosen_signs;
  std::string evidence;
  std::string emptiness;  // "no", "yes (...)", "undecided ..."
  std::string rank;
  std::vector<TValue> t;
  std::vector<Coords> points;          // per t, display coordinates; empty entry when no rational preimage
  std::vector<std::string> extra;      // per t interpretation column
  std::vector<SignCase> cases;
  bool oracle_t_found = true;
};

struct DirectCheck {
  std::string kind;  // "biquartic" or "system"
  std::vector<std::string> solutions;
  std::vector<std::string> identities;
  bool identities_ok = true;
  std::vector<std::string> fields_p1, fields_p2;
};

struct Certificate {
  int format = 1;
  std::string name;
  std::string permutation;
  int model_index = 0;
  int j3 = 0, j4 = 0;
  QMatrix reduced;
  Coords model_point;
  std::string field;
  QPoly p3, p4;
  SelmerSet selmer3, selmer4, trivial_images, quotient3, twists;
  long height = 0, prime_bound = 0;
  std::vector<TwistRow> rows;
  std::vector<Coords> orbits;  // display coordinates
  std::vector<std::string> interpretation;
  std::optional<DirectCheck> direct;
  std::string completeness;
  bool undecided = false;
  std::vector<std::string> notes;
};

struct RunOptions {
  std::optional<long> height;
  std::optional<long> prime_bound;
  std::optional<ModelSpec> model;
  std::vector<RankOracleEntry> extra_oracle;
  int workers = 1;
};

Certificate run(const ProblemSpec& problem, const RunOptions& opt = {});

// Corpus.
ProblemSpec build_pell(const Rational& a, const Rational& q);
ProblemSpec build_edwards();
ProblemSpec build_bremner();
ProblemSpec build_flynn();
std::vector<std::string> example_names();
ProblemSpec example(const std::string& name);  // throws InputError

// Interpretations on original (signed) coordinates.
std::string interpret_pell(const Coords& X, const Rational& a, const Rational& q);
std::string interpret_edwards(const Coords& X);
// t-value of the original quartic pair and its (x, y) class with (A, B).
std::string interpret_bremner(const Coords& X);
std::pair<Integer, Integer> bremner_xy(const Coords& X);
// The quartic pair's parameter read as x/y, normalized with x >= 0.
std::pair<Integer, Integer> bremner_xy_of_t(const TValue& t);
std::string interpret_flynn(const Coords& X);

BiquarticModel generate_S_a(const Rational& a);

// Model from a problem (with overrides applied).
DiagonalGenus5 build_curve(const ProblemSpec& p, const ModelSpec& m, int* index_out = nullptr);

std::string table_text(const Certificate& c, const ProblemSpec& p);

// JSON.
ProblemSpec problem_from_json(const std::string& text);
std::string problem_to_json(const ProblemSpec& p);
std::string certificate_to_json(const Certificate& c);
std::vector<RankOracleEntry> oracle_from_json(const std::string& text);
std::string biquartic_to_json(const BiquarticModel& m, const Rational& a);

}  // namespace g5rp
