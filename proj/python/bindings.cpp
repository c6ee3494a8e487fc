#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qtdelta/errors.hpp"
#include "qtdelta/genpoly.hpp"
#include "qtdelta/q_analogues.hpp"
#include "qtdelta/schedule.hpp"
#include "qtdelta/symfunc.hpp"
#include "qtdelta/verify.hpp"

namespace py = pybind11;
using namespace qtdelta;

namespace {

EnumSpec make_spec(const std::string& family, const std::string& kind, int m, int n, int k, std::optional<int> touching,
                   int alphabet) {
  EnumSpec spec;
  spec.family = parse_family(family);
  spec.kind = parse_kind(kind);
  spec.m = m;
  spec.n = n;
  spec.k = k;
  spec.touching = touching;
  spec.alphabet_max = alphabet;
  return spec;
}

SymFunc as_symfunc(const py::object& f) {
  if (py::isinstance<SymFunc>(f)) return f.cast<SymFunc>();
  return parse_symfunc(f.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "q,t-enumeration of decorated lattice paths and Macdonald operator checks";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidParams>(m, "InvalidParams", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotPolynomial>(m, "NotPolynomial", base.ptr());
  py::register_exception<UnrealizableWord>(m, "UnrealizableWord", base.ptr());
  py::register_exception<DegreeTooLarge>(m, "DegreeTooLarge", base.ptr());
  py::register_exception<NotSymmetric>(m, "NotSymmetric", base.ptr());

  py::class_<QTPoly>(m, "QTPoly")
      .def(py::init([](const std::string& text) { return QTPoly::parse(text); }), py::arg("text") = "0")
      .def("__str__", &QTPoly::to_string)
      .def("__repr__", [](const QTPoly& p) { return "QTPoly('" + p.to_string() + "')"; })
      .def("__eq__", [](const QTPoly& a, const QTPoly& b) { return a == b; })
      .def("__add__", [](const QTPoly& a, const QTPoly& b) { return a + b; })
      .def("__sub__", [](const QTPoly& a, const QTPoly& b) { return a - b; })
      .def("__mul__", [](const QTPoly& a, const QTPoly& b) { return a * b; })
      .def("coeff", [](const QTPoly& p, int qexp, int texp) { return rational_to_string(p.coeff(qexp, texp)); })
      .def("evaluate", [](const QTPoly& p, long qv, long tv) { return rational_to_string(p.evaluate(Rational(qv), Rational(tv))); })
      .def("is_zero", &QTPoly::is_zero);

  py::class_<DecoratedPath>(m, "DecoratedPath")
      .def(py::init([](std::vector<int> area_word, std::vector<int> labels, const std::string& kind,
                       std::vector<int> decorations) {
             return DecoratedPath{std::move(area_word), std::move(labels), parse_kind(kind), std::move(decorations)};
           }),
           py::arg("area_word"), py::arg("labels"), py::arg("kind") = "valley", py::arg("decorations") = std::vector<int>{})
      .def_readonly("area_word", &DecoratedPath::area_word)
      .def_readonly("labels", &DecoratedPath::labels)
      .def_property_readonly("kind", [](const DecoratedPath& p) { return to_string(p.kind); })
      .def_readonly("decorations", &DecoratedPath::decorations)
      .def("is_valid", [](const DecoratedPath& p) { return is_valid(p); })
      .def("dinv", [](const DecoratedPath& p) { return dinv(p); })
      .def("area", [](const DecoratedPath& p) { return area(p); })
      .def("shift", [](const DecoratedPath& p) { return shift(p.area_word); })
      .def("diagonal_word", [](const DecoratedPath& p) { return diagonal_word(p).to_string(); })
      .def("to_line", [](const DecoratedPath& p) { return to_line(p); })
      .def("to_json", [](const DecoratedPath& p) { return to_json(p); })
      .def_static("parse_line", [](const std::string& s) { return parse_line(s); })
      .def_static("from_json", [](const std::string& s) { return path_from_json(s); })
      .def("__eq__", [](const DecoratedPath& a, const DecoratedPath& b) { return a == b; })
      .def("__repr__", [](const DecoratedPath& p) { return "DecoratedPath(" + to_line(p) + ")"; });

  m.def(
      "enumerate",
      [](const std::string& family, const std::string& kind, int mm, int n, int k, std::optional<int> touching,
         int alphabet) {
        py::gil_scoped_release release;
        return enumerate_all(make_spec(family, kind, mm, n, k, touching, alphabet));
      },
      py::arg("family") = "lsq", py::arg("kind") = "valley", py::arg("m") = 0, py::arg("n") = 1, py::arg("k") = 0,
      py::arg("touching") = py::none(), py::arg("alphabet") = 0);
  m.def(
      "genpoly_json",
      [](const std::string& family, const std::string& kind, int mm, int n, int k, std::optional<int> touching,
         bool dominant) {
        py::gil_scoped_release release;
        const EnumSpec spec = make_spec(family, kind, mm, n, k, touching, 0);
        return (dominant ? generating_polynomial_by_content(spec) : generating_polynomial(spec)).to_json();
      },
      py::arg("family") = "lsq", py::arg("kind") = "valley", py::arg("m") = 0, py::arg("n") = 1, py::arg("k") = 0,
      py::arg("touching") = py::none(), py::arg("dominant") = false);

  m.def("q_analogue", &q_analogue);
  m.def("q_binomial", &q_binomial);
  m.def("schedule_product", [](const std::string& word, int s) { return schedule_product(MarkedWord::parse(word), s); },
        py::arg("word"), py::arg("shift"));
  m.def("b_exponent", [](const std::string& word, int s) { return b_exponent(MarkedWord::parse(word), s); });
  m.def("insertion_generate",
        [](const std::string& word, int s) { return insertion_generate(MarkedWord::parse(word), s); }, py::arg("word"),
        py::arg("shift"));
  m.def("class_paths", [](const std::string& word, int s) { return class_paths_bruteforce(MarkedWord::parse(word), s); },
        py::arg("word"), py::arg("shift"));
  m.def("qt_enumerator", &qt_enumerator);

  py::class_<SymFunc>(m, "SymFunc")
      .def(py::init([](const std::string& text) { return parse_symfunc(text); }))
      .def_property_readonly("degree", &SymFunc::degree)
      .def_property_readonly("basis", [](const SymFunc& f) { return to_string(f.basis()); })
      .def("convert", [](const SymFunc& f, const std::string& b) { return convert(f, parse_basis(b)); })
      .def("__str__", &SymFunc::to_string)
      .def("__repr__", [](const SymFunc& f) { return "SymFunc('" + f.to_string() + "')"; })
      .def("__eq__", [](const SymFunc& a, const SymFunc& b) { return equal(a, b); })
      .def("__add__", [](const SymFunc& a, const SymFunc& b) { return convert(a, Basis::schur) + convert(b, Basis::schur); })
      .def("__sub__", [](const SymFunc& a, const SymFunc& b) { return convert(a, Basis::schur) - convert(b, Basis::schur); })
      .def("genpoly_json", [](const SymFunc& f) { return f.to_genpoly().to_json(); });

  m.def("nabla", [](const py::object& f) { return nabla(as_symfunc(f)); });
  m.def("delta", [](const py::object& f, const py::object& F) { return delta(as_symfunc(f), as_symfunc(F)); });
  m.def("delta_prime", [](const py::object& f, const py::object& F) { return delta_prime(as_symfunc(f), as_symfunc(F)); });
  m.def("theta", [](int k, const py::object& F) { return theta(k, as_symfunc(F)); });
  m.def("omega", [](const py::object& f) { return omega(as_symfunc(f)); });
  m.def("e_nk", &e_nk);
  m.def("macdonald", [](const std::vector<int>& mu) { return macdonald(Partition(mu)); });
  m.def("set_max_degree", &set_max_degree);
  m.def("disable_macdonald_cache", [] { configure_macdonald_cache({false, std::nullopt}); });

  m.def(
      "check_identity",
      [](const std::string& name, int n, int k) {
        py::gil_scoped_release release;
        return check_identity(name, n, k).to_json();
      },
      py::arg("name"), py::arg("n"), py::arg("k") = 0);
  m.def(
      "check_conjecture",
      [](const std::string& name, int mm, int n, int k, std::optional<int> r) {
        py::gil_scoped_release release;
        return check_conjecture(name, mm, n, k, r).to_json();
      },
      py::arg("name"), py::arg("m") = 0, py::arg("n") = 1, py::arg("k") = 0, py::arg("r") = py::none());
  m.def("identity_names", &identity_names);
  m.def("conjecture_names", &conjecture_names);
  m.def("suite_families", &suite_families);
  m.def(
      "run_suite",
      [](int max_size, std::vector<std::string> families, int jobs, int max_k) {
        py::gil_scoped_release release;
        SuiteOptions o;
        o.max_size = max_size;
        o.max_k = max_k;
        o.families = std::move(families);
        o.jobs = jobs;
        std::ostringstream out;
        run_suite(o, out);
        return out.str();
      },
      py::arg("max_size"), py::arg("families"), py::arg("jobs") = 0, py::arg("max_k") = 2);
}
