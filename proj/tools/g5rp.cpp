#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "g5rp/pipeline.hpp"

using namespace g5rp;

namespace {

constexpr int kOk = 0, kFailure = 1, kUndecided = 2, kMalformed = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "P,j3,j4": P is a model index 1..10 or a cycle string; split from the right.
ModelSpec parse_model(const std::string& s) {
  auto c2 = s.rfind(',');
  if (c2 == std::string::npos) throw InputError("--model expects P,j3,j4");
  auto c1 = s.rfind(',', c2 - 1);
  if (c1 == std::string::npos || c2 == 0) throw InputError("--model expects P,j3,j4");
  ModelSpec m;
  std::string P = s.substr(0, c1);
  try {
    m.j3 = std::stoi(s.substr(c1 + 1, c2 - c1 - 1));
    m.j4 = std::stoi(s.substr(c2 + 1));
  } catch (const std::exception&) {
    throw InputError("--model: j3 and j4 must be integers");
  }
  if (m.j3 < 1 || m.j3 > 3 || m.j4 < 1 || m.j4 > 3) throw InputError("--model: j3 and j4 must be in 1..3");
  auto first = P.find_first_not_of(' ');
  if (first == std::string::npos) throw InputError("--model: empty model");
  P = P.substr(first);
  if (P[0] == '(') {
    try {
      m.perm = Permutation::parse_cycles(P);
    } catch (const MathError& e) {
      throw InputError(std::string("--model: ") + e.what());
    }
  } else {
    try {
      m.index = std::stoi(P);
    } catch (const std::exception&) {
      throw InputError("--model: P must be an index 1..10 or a cycle string such as (3 5)");
    }
    if (m.index < 1 || m.index > 10) throw InputError("--model: index must be in 1..10");
  }
  return m;
}

ProblemSpec load_problem(const std::string& arg) {
  for (auto& n : example_names())
    if (n == arg) return example(arg);
  return problem_from_json(slurp(arg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational points on diagonal genus 5 curves"};
  app.require_subcommand(1);

  auto* ex = app.add_subcommand("examples", "Built-in example problems");
  ex->require_subcommand(1);
  auto* ex_list = ex->add_subcommand("list", "List example names");
  std::string show_name;
  auto* ex_show = ex->add_subcommand("show", "Print an example as a problem file");
  ex_show->add_option("name", show_name)->required();

  std::string problem_file, oracle_file, model_str, out_file;
  std::optional<long> height, primes;
  int workers = 1;
  bool as_json = false;
  auto* run_cmd = app.add_subcommand("run", "Run the pipeline on a problem file (or example name)");
  run_cmd->add_option("problem", problem_file, "problem file")->required();
  run_cmd->add_option("--height", height, "height bound N");
  run_cmd->add_option("--primes", primes, "extra prime bound B for local checks");
  run_cmd->add_option("--oracle", oracle_file, "rank oracle file");
  run_cmd->add_option("--model", model_str, "P,j3,j4 with P an index 1..10 or a cycle string");
  run_cmd->add_option("--workers", workers, "search threads");
  run_cmd->add_option("--out", out_file, "write the certificate to this file");
  run_cmd->add_flag("--json", as_json, "print the certificate instead of the table");

  std::string table_name;
  auto* table_cmd = app.add_subcommand("table", "Print the table for a built-in example");
  table_cmd->add_option("example", table_name)->required();
  table_cmd->add_option("--height", height, "height bound N");
  table_cmd->add_option("--workers", workers, "search threads");

  std::string a_str;
  auto* sa_cmd = app.add_subcommand("sa", "Emit the fiber S_a as a biquartic problem file");
  sa_cmd->add_option("--a", a_str, "rational parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (ex_list->parsed()) {
      for (auto& n : example_names()) std::cout << n << "  " << example(n).note << "\n";
      return kOk;
    }
    if (ex_show->parsed()) {
      std::cout << problem_to_json(example(show_name));
      return kOk;
    }
    if (sa_cmd->parsed()) {
      Rational a;
      if (a_str.empty() || a.set_str(a_str, 10) != 0 || a.get_den() == 0) throw InputError("--a: malformed rational");
      a.canonicalize();
      BiquarticModel m;
      try {
        m = generate_S_a(a);
      } catch (const MathError& e) {
        throw InputError(std::string("S_a degenerate: ") + e.what());
      }
      std::cout << biquartic_to_json(m, a);
      return kOk;
    }
    RunOptions opt;
    opt.workers = workers;
    if (height) {
      if (*height < 1) throw InputError("--height must be >= 1");
      opt.height = *height;
    }
    if (table_cmd->parsed()) {
      ProblemSpec p = example(table_name);
      Certificate c = run(p, opt);
      std::cout << table_text(c, p);
      return c.undecided ? kUndecided : kOk;
    }
    if (run_cmd->parsed()) {
      if (workers < 1) throw InputError("--workers must be >= 1");
      if (primes) {
        if (*primes < 0) throw InputError("--primes must be >= 0");
        opt.prime_bound = *primes;
      }
      if (!oracle_file.empty()) opt.extra_oracle = oracle_from_json(slurp(oracle_file));
      if (!model_str.empty()) opt.model = parse_model(model_str);
      ProblemSpec p = load_problem(problem_file);
      Certificate c = run(p, opt);
      std::string cj = certificate_to_json(c);
      if (!out_file.empty()) {
        std::ofstream o(out_file);
        if (!o) throw InputError("cannot write '" + out_file + "'");
        o << cj;
      }
      std::cout << (as_json ? cj : table_text(c, p));
      return c.undecided ? kUndecided : kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
