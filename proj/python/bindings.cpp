#include <cubicmw/parse.hpp>
#include <cubicmw/report.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cubicmw;

namespace {

std::vector<Rat> rats(const std::vector<std::string>& words) {
  std::vector<Rat> out;
  for (const auto& w : words) out.push_back(parse_rat(w));
  return out;
}

ProjPoint point(const std::vector<std::string>& coords) {
  if (coords.size() != 3) throw Error(Error::Kind::Parse, "a point needs three coordinates");
  const auto c = rats(coords);
  return ProjPoint(c[0], c[1], c[2]);
}

}  // namespace

PYBIND11_MODULE(_cubicmw, m) {
  m.doc() = "Exact analysis of cubic pencils and rational elliptic surfaces";

  // Raw handles, kept alive for the life of the interpreter.
  static PyObject* kinds[6];
  const py::exception<Error> base(m, "Error");
  const char* names[6] = {"DomainError",      "ParseError",
                          "InvalidPencilError", "NotEllipticError",
                          "InconsistentSurfaceError", "UnsupportedError"};
  for (int i = 0; i < 6; ++i) kinds[i] = py::exception<Error>(m, names[i], base.ptr()).inc_ref().ptr();
  base.inc_ref();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(kinds[static_cast<int>(e.kind())], e.what());
    }
  });

  // Reports cross the boundary as JSON text; the Python layer decodes them.
  m.def(
      "analyze_pencil",
      [](const std::string& h1, const std::string& h2, const std::optional<std::vector<std::string>>& base) {
        const CubicPencil p(PlaneCurve(parse_form(h1)), PlaneCurve(parse_form(h2)));
        std::optional<ProjPoint> b;
        if (base) b = point(*base);
        return pencil_report(p, b).dump();
      },
      py::arg("h1"), py::arg("h2"), py::arg("base") = py::none());
  m.def(
      "analyze_weierstrass", [](const std::string& eq) { return fibration_report(parse_weierstrass(eq)).dump(); },
      py::arg("equation"));
  m.def(
      "family",
      [](const std::string& id, const std::vector<std::string>& coeffs) {
        return family_report(parse_family(id), rats(coeffs)).dump();
      },
      py::arg("family"), py::arg("coefficients"));
  m.def(
      "lattice",
      [](const std::string& id, const std::optional<std::string>& norm, bool list) {
        std::optional<Rat> n;
        if (norm) n = parse_rat(*norm);
        return lattice_report(LatticeName::parse(id), n, list).dump();
      },
      py::arg("lattice"), py::arg("minimal_norm") = py::none(), py::arg("list_vectors") = false);
  m.def(
      "delpezzo", [](int points, bool list) { return delpezzo_report(points, list).dump(); }, py::arg("m"),
      py::arg("list_classes") = false);
  m.def(
      "ninth_base_parameter", [](const std::vector<std::string>& u) { return to_string(ninth_base_parameter(rats(u))); },
      py::arg("u"));
  m.def(
      "manin_q_parameter", [](const std::vector<std::string>& u) { return to_string(manin_q_parameter(rats(u))); },
      py::arg("u"));
}
