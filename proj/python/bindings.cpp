#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlorentz/algebras.hpp"
#include "qlorentz/export.hpp"
#include "qlorentz/expr.hpp"
#include "qlorentz/qcombinatorics.hpp"
#include "qlorentz/repr.hpp"
#include "qlorentz/sigma.hpp"
#include "qlorentz/suites.hpp"

namespace py = pybind11;
using namespace qlorentz;

namespace {

std::vector<std::vector<std::string>> render(const NCMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).to_string());
  return out;
}

std::vector<std::vector<std::string>> render(const LMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).to_string());
  return out;
}

NCPoly same_algebra(const NCPoly& x, const NCPoly& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("polynomials belong to different algebras");
  return y;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-deformed spinor calculus over SL_q(2)";

  py::class_<NCPoly>(m, "Poly")
      .def(py::init([](const std::string& expr, const std::string& spec) {
             return parse_poly(expr, named_algebra(spec));
           }),
           py::arg("expr"), py::arg("spec") = "slq2")
      .def_property_readonly("algebra", [](const NCPoly& p) { return p.algebra()->name(); })
      .def("is_zero", &NCPoly::is_zero)
      .def("reduce", [](const NCPoly& p) { return reduce_unimodular(p); },
           "Apply the unit-determinant relation ad = 1 + q bc")
      .def("commutator", [](const NCPoly& x, const NCPoly& y) { return commutator(x, same_algebra(x, y)); })
      .def("at_one", &specialize_at_one, "Coefficients specialized at q = 1")
      .def("star", &star)
      .def("to_json", [](const NCPoly& p) { return to_json(p).dump(); })
      .def("terms",
           [](const NCPoly& p) {
             std::vector<std::pair<std::vector<std::string>, std::string>> out;
             for (const auto& [w, c] : p.terms()) {
               std::vector<std::string> word;
               for (GenIndex g : w) word.push_back(p.algebra()->generators()[g].name);
               out.emplace_back(std::move(word), c.to_string());
             }
             return out;
           })
      .def("__add__", [](const NCPoly& x, const NCPoly& y) { return x + same_algebra(x, y); })
      .def("__sub__", [](const NCPoly& x, const NCPoly& y) { return x - same_algebra(x, y); })
      .def("__mul__", [](const NCPoly& x, const NCPoly& y) { return x * same_algebra(x, y); })
      .def("__mul__", [](const NCPoly& x, long k) { return x * Laurent(k); })
      .def("__rmul__", [](const NCPoly& x, long k) { return Laurent(k) * x; })
      .def("__pow__", [](const NCPoly& x, unsigned n) { return x.pow(n); })
      .def("__neg__", [](const NCPoly& x) { return -x; })
      .def("__eq__", [](const NCPoly& x, const NCPoly& y) { return x.algebra() == y.algebra() && x == y; })
      .def("__str__", &print_canonical)
      .def("__repr__", [](const NCPoly& p) { return "Poly('" + print_canonical(p) + "', spec='" + p.algebra()->name() + "')"; });

  m.def("normalize",
        [](const std::string& expr, const std::string& spec, bool reduce) {
          NCPoly p = parse_poly(expr, named_algebra(spec));
          return print_canonical(reduce ? reduce_unimodular(p) : p);
        },
        py::arg("expr"), py::arg("spec") = "slq2", py::arg("reduce") = false);
  m.def("parse_tree", [](const std::string& expr) { return to_sexpr(parse_expr(expr)); });
  m.def("algebra_names", &algebra_names);
  m.def("suite_names", &suite_names);

  m.def("verify",
        [](const std::string& suite, const std::string& mutate) {
          SuiteOptions options;
          if (!mutate.empty()) options.mutation = parse_mutation(mutate);
          SuiteReport r = run_suite(suite, options);
          py::list items;
          for (const auto& it : r.items)
            items.append(py::dict(py::arg("id") = it.id, py::arg("description") = it.description,
                                  py::arg("passed") = it.pass, py::arg("residual") = it.residual));
          return py::dict(py::arg("suite") = r.suite, py::arg("passed") = r.all_pass(), py::arg("items") = items);
        },
        py::arg("suite"), py::arg("mutate") = "");

  m.def("emit",
        [](const std::string& kind, const std::string& j, std::optional<double> q, const std::string& format) {
          if (format != "json" && format != "text") throw std::invalid_argument("format must be json or text");
          EmitRequest r;
          r.kind = kind;
          r.two_j = parse_two_j(j);
          r.q = q;
          r.format = format == "json" ? ArtifactFormat::Json : ArtifactFormat::Text;
          return emit_artifact(r);
        },
        py::arg("kind"), py::arg("j") = "1/2", py::arg("q") = py::none(), py::arg("format") = "json");

  m.def("dmatrix",
        [](const std::string& j, bool closed_form) {
          int two_j = parse_two_j(j);
          return render(closed_form ? formula_dmatrix(two_j).entries : derive_dmatrix(two_j).entries);
        },
        py::arg("j"), py::arg("closed_form") = false,
        "Spin-j matrix in the unnormalized monomial basis, rows and columns m = j .. -j");
  m.def("eta", [] { return render(eta_upper(build_bar_sigma())); }, "Metric from 1/2 Tr(bar_sigma^m sigma^n)");
  m.def("reference_eta", [] { return render(reference_eta_upper()); });
  m.def("bar_sigma", [] {
    std::vector<std::vector<std::vector<std::string>>> out;
    for (const auto& s : build_bar_sigma().bar_sigma) out.push_back(render(s));
    return out;
  });
  m.def("q_binomial", [](int n, int k) { return q_binomial(n, k).to_string(); });
  m.def("basic_integer", [](int n) { return basic_integer(n).to_string(); });
}
