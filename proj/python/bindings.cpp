#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "g5rp/localsolve.hpp"
#include "g5rp/pipeline.hpp"

namespace py = pybind11;
using namespace g5rp;

namespace {
QPoly poly_of(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (auto& s : coeffs) c.push_back(parse_rational(s));
  return QPoly(std::move(c));
}
}  // namespace

PYBIND11_MODULE(_g5rp, m) {
  m.doc() = "native core; use the g5rp package";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<MathError>(m, "MathError", PyExc_ArithmeticError);

  m.def("example_names", &example_names);
  m.def("example_json", [](const std::string& name) { return problem_to_json(example(name)); });
  m.def(
      "run_json",
      [](const std::string& problem, std::optional<long> height, std::optional<long> primes, int workers) {
        RunOptions opt;
        if (height && *height < 1) throw InputError("height must be >= 1");
        if (primes && *primes < 0) throw InputError("primes must be >= 0");
        opt.height = height;
        opt.prime_bound = primes;
        opt.workers = workers;
        ProblemSpec p = problem_from_json(problem);
        py::gil_scoped_release nogil;
        return certificate_to_json(run(p, opt));
      },
      py::arg("problem"), py::arg("height") = py::none(), py::arg("primes") = py::none(), py::arg("workers") = 1);
  m.def("table", [](const std::string& name) {
    ProblemSpec p = example(name);
    Certificate c;
    {
      py::gil_scoped_release nogil;
      c = run(p);
    }
    return table_text(c, p);
  });
  m.def("sa_json", [](const std::string& a) {
    Rational q = parse_rational(a);
    try {
      return biquartic_to_json(generate_S_a(q), q);
    } catch (const MathError& e) {
      throw InputError(std::string("S_a degenerate: ") + e.what());
    }
  });
  m.def("squarefree_part", [](const std::string& q) { return str(squarefree_part(parse_rational(q))); });
  m.def(
      "has_qp_point",
      [](const std::string& c, const std::vector<std::string>& f, long p) {
        return has_Qp_point(parse_rational(c), poly_of(f), Integer(p));
      },
      "c*y^2 = f(t) has a point over Q_p; f given low degree first", py::arg("c"), py::arg("f"), py::arg("p"));
}
