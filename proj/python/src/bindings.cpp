#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grcat/catspec.hpp"
#include "grcat/filtration.hpp"
#include "grcat/generator.hpp"
#include "grcat/measure.hpp"
#include "grcat/render.hpp"
#include "grcat/simpleminded.hpp"
#include "grcat/theorems.hpp"

namespace py = pybind11;
using namespace grcat;

namespace {

std::vector<Index> indices(const CategorySpec& spec, const std::vector<std::string>& ids) {
  std::vector<Index> out;
  for (const auto& id : ids) out.push_back(spec.require(id));
  return out;
}

ObjectRef object(const CategorySpec& spec, const std::vector<std::string>& ids) {
  return ObjectRef(indices(spec, ids));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gabriel-Roiter measures and length-category checks (C++ core)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);

  py::class_<CategorySpec>(m, "Spec")
      .def_static("from_json", [](const std::string& text) { return parse_spec(text); })
      .def_static("load", [](const std::string& path) { return load_spec(path); })
      .def("to_json", &render_spec)
      .def_readonly("name", &CategorySpec::name)
      .def_property_readonly("ids",
                             [](const CategorySpec& s) {
                               std::vector<std::string> out;
                               for (const auto& ind : s.indecomposables) out.push_back(ind.id);
                               return out;
                             })
      .def_property_readonly("thetas",
                             [](const CategorySpec& s) {
                               std::vector<Length> out;
                               for (const auto& ind : s.indecomposables) out.push_back(ind.theta);
                               return out;
                             })
      .def("hom", [](const CategorySpec& s, const std::string& x, const std::string& y) {
        return s.hom(s.require(x), s.require(y));
      })
      .def("__len__", &CategorySpec::size)
      .def("__eq__", [](const CategorySpec& a, const CategorySpec& b) { return a == b; })
      .def("validate",
           [](const CategorySpec& s) {
             std::vector<std::tuple<std::string, std::string, std::string>> out;
             for (const auto& v : validate_spec(s).violations) out.emplace_back(v.rule, v.message, v.witness);
             return out;
           },
           "List of (rule, message, witness); empty when well formed.")
      .def("measures",
           [](const CategorySpec& s) {
             std::vector<std::vector<std::uint64_t>> out;
             for (const auto& c : gr_measures(s)) out.push_back(c.elems());
             return out;
           })
      .def("measure_bruteforce",
           [](const CategorySpec& s, const std::string& id, std::size_t max_objects) {
             return gr_measure_bruteforce(s, s.require(id), max_objects).elems();
           },
           py::arg("id"), py::arg("max_objects") = 20)
      .def("measure_table_json",
           [](const CategorySpec& s) { return render_measure_table(s, gr_table(s), Format::json); })
      .def("measure_table_text",
           [](const CategorySpec& s) { return render_measure_table(s, gr_table(s), Format::table); })
      .def("check_json",
           [](const CategorySpec& s, const std::string& suite) {
             if (suite == "gr-axioms") return report_to_json(check_gr_axioms(s));
             if (suite == "main-property") return report_to_json(check_main_property(s));
             if (suite == "ext-bound") return report_to_json(check_ext_bound(s));
             if (suite == "small-lemmas") return report_to_json(check_small_lemmas(s));
             if (suite == "all") return report_to_json(check_all(s));
             throw std::invalid_argument("unknown suite \"" + suite + "\"");
           },
           py::arg("suite") = "all")
      .def("report_json",
           [](const CategorySpec& s) {
             return render_brauer_thrall(s, brauer_thrall_report(s), Format::json);
           })
      .def("theta_infinity",
           [](const CategorySpec& s) {
             const BrickSet b = theta_infinity(s);
             std::vector<std::string> ids;
             for (Index i : b.members) ids.push_back(s.id(i));
             return py::make_tuple(ids, b.semibrick, std::string(to_string(b.sms)));
           },
           "(members, semibrick, sms) with sms one of 'true', 'false', 'unknown'.")
      .def("x_length",
           [](const CategorySpec& s, const std::vector<std::string>& gens,
              const std::vector<std::string>& obj) -> std::optional<Length> {
             const XLength l = x_length(s, indices(s, gens), object(s, obj));
             if (!l.in_filt()) return std::nullopt;
             return l.value;
           },
           py::arg("generators"), py::arg("object"));

  m.def("generate_an", [](int n) { return gen::generate_an(n); }, py::arg("n"));
  m.def("fixture", [](const std::string& name, int window) { return gen::fixture(name, window); },
        py::arg("name"), py::arg("window") = 1);
  m.def("chain_leq", [](const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) {
    return chain_leq(Chain(x), Chain(y));
  });
}
