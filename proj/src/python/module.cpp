#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "strategem/analyses.hpp"
#include "strategem/cli.hpp"
#include "strategem/minilang/parser.hpp"
#include "strategem/minilang/pretty.hpp"

namespace py = pybind11;
namespace ml = strategem::minilang;
namespace an = strategem::analyses;
using strategem::Integer;

namespace {

std::vector<std::string> sorted(const strategem::NameSet& s) {
  return {s.begin(), s.end()};
}

Integer to_integer(const py::int_& i) {
  return Integer::from_string(py::str(static_cast<const py::handle&>(i)).cast<std::string>());
}

py::int_ to_py(const Integer& i) {
  return py::int_(py::module_::import("builtins").attr("int")(i.to_string()));
}

struct PyCoder {
  an::Coder coder = an::no_codes();

  std::int64_t encode(const std::string& expr) {
    auto [code, next] = an::encode(coder, ml::parse_expr(expr));
    coder = next;
    return code;
  }

  std::optional<std::int64_t> get(const std::string& expr) const {
    return an::get_code(coder, ml::parse_expr(expr));
  }
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Strategic traversal over mini-language modules";

  static py::exception<ml::SyntaxError> syntax_error(m, "SyntaxError");
  static py::exception<ml::MultipleFociError> foci_error(m, "MultipleFociError",
                                                          syntax_error.ptr());
  static py::exception<an::AnalysisError> analysis_error(m, "AnalysisError");
  static py::exception<an::AnalysisError> no_focus(m, "NoFocus", analysis_error.ptr());
  static py::exception<an::AnalysisError> no_alias(m, "NoSuchAlias", analysis_error.ptr());
  static py::exception<an::AnalysisError> guard(m, "GuardFailed", analysis_error.ptr());

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ml::MultipleFociError& e) {
      foci_error(e.what());
    } catch (const ml::SyntaxError& e) {
      syntax_error(e.what());
    } catch (const an::AnalysisError& e) {
      switch (e.kind()) {
        case an::FailureKind::NoFocus: no_focus(e.what()); break;
        case an::FailureKind::NoSuchAlias: no_alias(e.what()); break;
        case an::FailureKind::GuardFailed: guard(e.what()); break;
      }
    }
  });

  py::class_<ml::Module>(m, "Module")
      .def_static("parse", [](const std::string& src) { return ml::parse(src); })
      .def_property_readonly("name", [](const ml::Module& mod) { return mod.name; })
      .def("__len__", [](const ml::Module& mod) { return mod.decls.size(); })
      .def("__eq__", [](const ml::Module& a, const ml::Module& b) { return a == b; })
      .def("__str__", [](const ml::Module& mod) { return ml::pretty(mod); })
      .def("__repr__", [](const ml::Module& mod) {
        return "<Module " + mod.name + " with " +
               std::to_string(mod.decls.size()) + " declarations>";
      });

  m.def("parse", [](const std::string& src) { return ml::parse(src); });
  m.def("pretty", [](const ml::Module& mod) { return ml::pretty(mod); });

  m.def("inc_ints", [](const ml::Module& mod) { return an::inc_ints(mod); });
  m.def(
      "inc_pairs",
      [](const std::vector<std::pair<bool, py::int_>>& xs) {
        std::vector<std::pair<bool, Integer>> in;
        for (const auto& [b, i] : xs) in.emplace_back(b, to_integer(i));
        std::vector<std::pair<bool, py::int_>> out;
        for (const auto& [b, i] : an::inc_ints(in)) out.emplace_back(b, to_py(i));
        return out;
      },
      "Increments every integer in a list of (bool, int) pairs generically.");
  m.def("all_types", [](const ml::Module& mod) { return sorted(an::all_types(mod)); });
  m.def("is_fresh_type", &an::is_fresh_type);
  m.def("free_vars", [](const ml::Module& mod) { return sorted(an::free_vars(mod)); });
  m.def("free_vars_expr", [](const std::string& expr) {
    return sorted(an::free_vars(ml::parse_expr(expr)));
  });
  m.def("count_decls", &an::count_decls);
  m.def("de_bruijn", [](const ml::Module& mod) { return an::de_bruijn(mod); });
  m.def("select_focus", [](const ml::Module& mod) { return ml::pretty(an::select_focus(mod)); });
  m.def("select_type_focus",
        [](const ml::Module& mod) { return ml::pretty(an::select_type_focus(mod)); });
  m.def("to_alias", &an::to_alias, py::arg("name"), py::arg("module"));

  py::class_<PyCoder>(m, "Coder")
      .def(py::init<>())
      .def("encode", &PyCoder::encode, "Code for an expression, assigning one if new.")
      .def("get", &PyCoder::get)
      .def_property_readonly("counter", [](const PyCoder& c) { return c.coder.counter; });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"strategem"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = strategem::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
