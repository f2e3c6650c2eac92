#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bmw/cli.hpp"
#include "bmw/error.hpp"
#include "bmw/kauffman.hpp"

namespace py = pybind11;
using namespace bmw;

namespace {

py::int_ to_python(const Integer& x) {
  std::string digits = x.get_str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(digits.c_str(), nullptr, 10));
}

std::vector<std::pair<Connector, RingElem>> element_terms(const AlgebraElement& x) {
  return {x.terms().begin(), x.terms().end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in the BMW / Kauffman tangle algebra";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StrandMismatch>(m, "StrandMismatch", PyExc_ValueError);

  py::class_<RingElem>(m, "RingElem")
      .def(py::init<long>(), py::arg("constant") = 0)
      .def_static("parse", &RingElem::parse)
      .def_static("l", &RingElem::lambda, py::arg("power") = 1)
      .def_static("z", &RingElem::z, py::arg("power") = 1)
      .def_static("d", &RingElem::delta, py::arg("power") = 1)
      .def("is_zero", &RingElem::is_zero)
      .def("pow", &RingElem::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &RingElem::to_string)
      .def("__repr__", [](const RingElem& a) { return "RingElem('" + a.to_string() + "')"; });

  m.def("spec_brauer", [](const RingElem& a) { return spec_brauer(a).to_string(); },
        "Image under l -> 1, z -> 0, as text in d.");
  m.def("spec_s", [](const RingElem& a, int n) { return spec_s(a, n).to_string(); });

  py::class_<Connector>(m, "Connector")
      .def(py::init<std::vector<int>>(), py::arg("partner"))
      .def_static("parse", &Connector::parse)
      .def_static("identity", &Connector::identity)
      .def_static("hook", &Connector::hook)
      .def_property_readonly("strands", &Connector::strands)
      .def_property_readonly("partner", &Connector::pairing)
      .def("rank", &Connector::rank)
      .def("mirror", &Connector::mirror)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const Connector& c) { return py::hash(py::tuple(py::cast(c.pairing()))); })
      .def("__str__", &Connector::to_string)
      .def("__repr__", [](const Connector& c) { return "Connector('" + c.to_string() + "')"; });

  m.def("enumerate_connectors", &enumerate_connectors);
  m.def("connector_count", [](int n) { return to_python(connector_count(n)); });
  m.def("compose_connectors", [](const Connector& a, const Connector& b) {
    Composite c = compose_connectors(a, b);
    return std::make_pair(c.connector, c.loops);
  });

  py::class_<SliceWord>(m, "Word")
      .def(py::init<int>(), py::arg("n"))
      .def_static("parse", &SliceWord::parse, py::arg("text"), py::arg("n"))
      .def_property_readonly("strands", &SliceWord::strands)
      .def("__len__", &SliceWord::size)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &SliceWord::to_string)
      .def("__repr__", [](const SliceWord& w) {
        return "Word('" + w.to_string() + "', " + std::to_string(w.strands()) + ")";
      });

  m.def("canonical_word", &canonical_word);

  py::class_<AlgebraElement>(m, "Element")
      .def(py::init<int>(), py::arg("n"))
      .def_static("identity", &AlgebraElement::identity)
      .def_static("basis", &AlgebraElement::basis, py::arg("connector"), py::arg("coef") = RingElem(1))
      .def_static("parse", &AlgebraElement::parse, py::arg("text"), py::arg("n") = -1)
      .def_static("from_json", &AlgebraElement::from_json, py::arg("text"), py::arg("n") = -1)
      .def_property_readonly("strands", &AlgebraElement::strands)
      .def("terms", &element_terms)
      .def("coefficient", &AlgebraElement::coefficient)
      .def("is_zero", &AlgebraElement::is_zero)
      .def("to_json", &AlgebraElement::to_json)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__mul__", [](const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); })
      .def("__rmul__", [](const AlgebraElement& x, const RingElem& s) { return s * x; })
      .def(py::self == py::self)
      .def("__str__", &AlgebraElement::to_string)
      .def("__repr__", [](const AlgebraElement& x) { return "Element('" + x.to_string() + "')"; });

  m.def("normalize", py::overload_cast<const SliceWord&>(&normalize));
  m.def("normalize", [](const std::string& text, int n) { return normalize(SliceWord::parse(text, n)); },
        py::arg("text"), py::arg("n"));
  m.def("multiply", &multiply);
  m.def("alpha", py::overload_cast<const AlgebraElement&>(&alpha));
  m.def("rho", py::overload_cast<const AlgebraElement&>(&rho));
  m.def("rank_of", &rank_of);
  m.def("brauer_image", [](const AlgebraElement& x) {
    std::vector<std::pair<Connector, std::string>> out;
    for (const auto& [c, v] : brauer_image(x).terms()) out.emplace_back(c, v.to_string());
    return out;
  });

  m.def("dubrovnik", py::overload_cast<const SliceWord&>(&dubrovnik));
  m.def("dubrovnik", py::overload_cast<const AlgebraElement&>(&dubrovnik));
  m.def("gram_certificate", [](int n, int max_n) {
    GramMatrix a = gram_matrix(n, max_n);
    return gram_certificate(a).to_json();
  }, py::arg("n"), py::arg("max_n") = kDefaultGramLimit, py::call_guard<py::gil_scoped_release>());

  m.def("spanning_count", [](int n, int r) { return to_python(spanning_count(n, r)); });
  m.def("spanning_family", [](int n, int r) {
    std::vector<std::pair<SliceWord, Connector>> out;
    for (const SpanningMember& s : spanning_family(n, r)) out.emplace_back(s.word, s.leading);
    return out;
  });

  m.def("verify", [](int n, std::uint64_t seed) {
    std::vector<std::tuple<std::string, std::string, bool>> out;
    for (const CheckResult& c : verify_suite(n, seed).checks) out.emplace_back(c.group, c.name, c.passed);
    return out;
  }, py::arg("n"), py::arg("seed") = kDefaultSeed, py::call_guard<py::gil_scoped_release>());

  m.def("run", [](const std::vector<std::string>& args) {
    cli::Outcome o = cli::run(args);
    return py::make_tuple(o.exit_code, o.out, o.err);
  }, "Runs a command line and returns (exit code, stdout, stderr).");
}
