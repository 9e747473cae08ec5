#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hecke_lab/cli.hpp"
#include "hecke_lab/errors.hpp"

namespace py = pybind11;
using namespace hecke_lab;

namespace {

// Everything crosses the boundary as JSON text; the Python side decodes it.
cli::RunOptions options(std::optional<std::int64_t> p, bool exhaustive, std::uint64_t seed, int threads) {
  cli::RunOptions o;
  o.p = p;
  o.exhaustive = exhaustive;
  o.seed = seed;
  o.threads = threads > 0 ? threads : cli::default_threads();
  return o;
}

cli::CaseSpec spec(const std::string& text) { return cli::parse_case(Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "HeckeLabError");
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object exc = py::handle(error)(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    } catch (const Json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("__version__") = cli::kToolVersion;
  m.def("build", [](const std::string& c) { return cli::cmd_build(spec(c)).dump(); });
  m.def(
      "characters",
      [](const std::string& c, std::optional<std::int64_t> p, bool exhaustive) {
        return cli::cmd_characters(spec(c), options(p, exhaustive, 20240601, 1)).dump();
      },
      py::arg("case"), py::arg("p") = py::none(), py::arg("exhaustive") = false);
  m.def(
      "classify",
      [](const std::string& c, std::optional<std::int64_t> p, bool exhaustive) {
        return cli::cmd_classify(spec(c), options(p, exhaustive, 20240601, 1)).dump();
      },
      py::arg("case"), py::arg("p") = py::none(), py::arg("exhaustive") = false);
  m.def(
      "verify",
      [](const std::string& suite, std::optional<std::int64_t> p, bool exhaustive, std::uint64_t seed, int threads) {
        const auto o = options(p, exhaustive, seed, threads);
        py::gil_scoped_release release;
        auto r = cli::cmd_verify(Json::parse(suite), o);
        return std::make_pair(r.report.dump(), r.exit_code);
      },
      py::arg("suite"), py::arg("p") = py::none(), py::arg("exhaustive") = false, py::arg("seed") = 20240601,
      py::arg("threads") = 0);
  m.def("default_suite", [] { return cli::default_suite_text(); });
  m.def("run", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
