// Python module: exact values cross the boundary as strings ("p/q" and the
// other ExactScalar forms); the Python package converts rationals to Fraction.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetalab/errors.hpp"
#include "zetalab/io.hpp"
#include "zetalab/library.hpp"
#include "zetalab/perturb.hpp"
#include "zetalab/suite.hpp"

namespace py = pybind11;
using namespace zetalab;

namespace {

Rational rat(const py::handle& o) { return parse_rational(std::string(py::str(o))); }

py::dict scalar_dict(const ExactScalar& x) {
  py::dict d;
  d["exact"] = x.to_string();
  d["is_exact"] = x.is_exact();
  d["value"] = std::complex<double>(x.real(), x.imag());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zeta and eta functions of operator spectra, and pseudodifferential symbol residues";

  auto base = py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<PoleError>(m, "PoleError", base.ptr());
  py::register_exception<InsufficientDepthError>(m, "InsufficientDepthError", PyExc_RuntimeError);
  py::register_exception<LadderMisalignmentError>(m, "LadderMisalignmentError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<EllipticityError>(m, "EllipticityError", PyExc_ValueError);
  py::register_exception<RepresentationError>(m, "RepresentationError", PyExc_RuntimeError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<SpectralModel>(m, "Model")
      .def_static("library", [](const std::string& name, const py::object& a) { return library_model(name, rat(a)); },
                  py::arg("name"), py::arg("a") = 0)
      .def_static("from_json", &model_from_text, py::arg("text"))
      .def("to_json", &model_to_text)
      .def_readonly("name", &SpectralModel::name)
      .def_readonly("order", &SpectralModel::order)
      .def_readonly("dimension", &SpectralModel::dimension)
      .def_readonly("kernel_dim", &SpectralModel::kernel_dim)
      .def_readonly("notes", &SpectralModel::notes)
      .def("shift", [](const SpectralModel& s, const py::object& a) { return shift(s, rat(a)); }, py::arg("a"))
      .def("epsilon_scale", [](const SpectralModel& s, const py::object& e) { return epsilon_scale(s, rat(e)); },
           py::arg("epsilon"))
      .def("ec_perturb",
           [](const SpectralModel& s, const py::object& e, const py::object& c) { return ec_perturb(s, rat(e), rat(c)); },
           py::arg("epsilon"), py::arg("c"))
      .def("root", &root_op)
      .def("sign_power", &sign_power, py::arg("p"))
      .def("power_op",
           [](const SpectralModel& s, const py::object& a, const py::object& e, const py::object& c, long mm, bool force) {
             return power_op(s, {rat(a), rat(e), rat(c), mm, force});
           },
           py::arg("a") = 0, py::arg("epsilon") = 0, py::arg("c") = 0, py::arg("m") = 0, py::arg("force") = false)
      .def("__eq__", [](const SpectralModel& a, const SpectralModel& b) { return a == b; })
      .def("__repr__", [](const SpectralModel& s) {
        return "<Model " + s.name + " n=" + std::to_string(s.dimension) + " m=" + std::to_string(s.order) + ">";
      });

  m.def("library_names", [] {
    std::vector<std::string> out;
    for (const auto& e : library_entries()) out.push_back(e.name);
    return out;
  });

  m.def("residue",
        [](const SpectralModel& s, const std::string& fn, const py::object& sigma, long depth) {
          return make_function(s, parse_function_name(fn), depth).residue(rat(sigma)).to_string();
        },
        py::arg("model"), py::arg("function"), py::arg("sigma"), py::arg("depth") = -1);

  m.def("evaluate",
        [](const SpectralModel& s, const std::string& fn, const py::object& at, long prec, long depth) {
          return scalar_dict(evaluate(make_function(s, parse_function_name(fn), depth), ExactScalar(rat(at)), prec));
        },
        py::arg("model"), py::arg("function"), py::arg("s"), py::arg("prec") = kDefaultPrecision, py::arg("depth") = -1);

  m.def("pole_table_json",
        [](const SpectralModel& s, long floor, long depth, long prec) { return pole_table_json(pole_table(s, floor, depth, prec)).dump(); },
        py::arg("model"), py::arg("floor") = -2, py::arg("depth") = -1, py::arg("prec") = kDefaultPrecision);

  m.def("run_checks_json",
        [](const std::vector<std::string>& ids, bool exact_only, std::optional<SpectralModel> model, std::uint64_t seed) {
          SuiteConfig cfg;
          cfg.ids = ids;
          cfg.exact_only = exact_only;
          cfg.model = std::move(model);
          cfg.seed = seed;
          return report_json(run_all(cfg)).dump();
        },
        py::arg("ids") = std::vector<std::string>{}, py::arg("exact_only") = false, py::arg("model") = py::none(),
        py::arg("seed") = 20240611);

  py::class_<SymbolExpansion>(m, "Symbol")
      .def_static("circle", [](const py::object& a, long n) { return circle_symbol(rat(a), n); }, py::arg("a") = 0,
                  py::arg("truncation") = kDefaultTruncation)
      .def_static("xi_power", [](long d, long n) { return symbol_xi_power(d, n); }, py::arg("d"),
                  py::arg("truncation") = kDefaultTruncation)
      .def_static("abs_xi_power", [](long d, long n) { return symbol_abs_xi_power(d, n); }, py::arg("d"),
                  py::arg("truncation") = kDefaultTruncation)
      .def_static("from_json", &symbol_from_text, py::arg("text"))
      .def("to_json", &symbol_to_text)
      .def_property_readonly("order", &SymbolExpansion::order)
      .def_property_readonly("truncation", &SymbolExpansion::truncation)
      .def_property_readonly("rank", &SymbolExpansion::rank)
      .def("__matmul__", &compose)
      .def("__add__", &symbol_add)
      .def("shift", [](const SymbolExpansion& s, const py::object& a) { return symbol_shift(s, rat(a)); }, py::arg("a"))
      .def("parametrix", &parametrix)
      .def("power", &power_int, py::arg("k"))
      .def("abs_and_sign", &abs_and_sign)
      .def("ncr", [](const SymbolExpansion& s) { return ncr(s).to_string(); })
      .def("is_odd_class", &is_odd_class)
      .def("is_differential", &is_differential)
      .def("__eq__", [](const SymbolExpansion& a, const SymbolExpansion& b) { return a == b; })
      .def("__repr__", &SymbolExpansion::to_string);
}
