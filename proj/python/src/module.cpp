#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "priestley/cli.hpp"

namespace py = pybind11;
using namespace priestley;

namespace {

std::optional<std::string> optionalName(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Priestley duality and the symbolic frame fixtures.";

  static py::exception<Error> error(m, "PriestleyError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(toString(e.kind())), e.what(), e.witness());
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def(
      "check",
      [](const std::string& document, const std::string& suite, const std::string& only) {
        return runCheckSuite(parseInput(document), parseSuite(suite), optionalName(only)).toJson().dump();
      },
      py::arg("document"), py::arg("suite") = "all", py::arg("only") = "",
      "Run a check suite on a JSON input document; returns the report as JSON text.");

  m.def(
      "fixtures",
      [](std::size_t sample, std::uint64_t seed, const std::string& only) {
        Bounds b;
        b.sample = sample;
        return runFixtures(b, seed, optionalName(only)).toJson().dump();
      },
      py::arg("sample") = Bounds{}.sample, py::arg("seed") = 0, py::arg("only") = "",
      "Run the symbolic frame suite; returns the report as JSON text.");

  m.def(
      "emit",
      [](const std::string& document, const std::string& format, const std::string& target,
         const std::string& suite) {
        return emit(parseInput(document), parseFormat(format), parseTarget(target), parseSuite(suite));
      },
      py::arg("document"), py::arg("format") = "json", py::arg("target") = "dual", py::arg("suite") = "all");

  m.def("check_names", [](const std::string& document, const std::string& suite) {
    return checkNames(parseInput(document), parseSuite(suite));
  }, py::arg("document"), py::arg("suite") = "all");

  m.def("fixture_check_names", &fixtureCheckNames);
}
