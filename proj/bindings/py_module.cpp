#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopfind/census.hpp"

namespace py = pybind11;
using namespace hopfind;

namespace {

json parse_spec(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(e.what());
    }
}

// Owning wrapper so python holds the algebra and its construction history.
struct PyHopf {
    HopfAlgebra h;

    static PyHopf from_spec(const std::string& spec) { return PyHopf{hopf_from_spec(parse_spec(spec))}; }

    long dim() const { return h.dim; }
    std::vector<std::string> labels() const { return h.labels; }
    std::vector<std::string> validate() const {
        std::vector<std::string> out;
        for (const auto& v : validate_hopf(h)) {
            std::string s = v.axiom;
            for (long w : v.witness) s += " " + std::to_string(w);
            out.push_back(std::move(s));
        }
        return out;
    }
    long exp() const { return exponent(h); }
    long fsexp() const { return fs_exponent(h); }
    PyHopf dual() const { return PyHopf{dual_hopf(h)}; }
    PyHopf variant(bool flip_mul, bool flip_comul) const { return PyHopf{op_cop_variants(h, flip_mul, flip_comul)}; }
    std::string serialize() const { return serialize_hopf(h); }

    std::string indicator(const std::string& module_spec, long n) const {
        HModule m = [&] {
            json spec = parse_spec(module_spec);
            std::string kind = spec.at("kind").get<std::string>();
            if (kind == "regular") return regular_module(h);
            if (kind == "trivial") return trivial_module(h);
            if (kind == "one_dim") {
                Vec phi;
                for (const auto& s : spec.at("values")) phi.push_back(CycScalar::from_string(s.get<std::string>()));
                return one_dim_module(h, phi);
            }
            throw SpecError("unknown module kind '" + kind + "'");
        }();
        return hopfind::indicator(m, n).str();
    }

    std::vector<std::tuple<long, std::string, bool>> regular_indicators(long n_max) const {
        IndicatorEngine eng(h);
        Vec chi = character_of(regular_module(h)).values;
        std::vector<std::tuple<long, std::string, bool>> out;
        long hi = n_max > 0 ? n_max : exponent(h);
        for (long n = 1; n <= hi; ++n) {
            CycScalar v = eng.of_character(chi, n);
            out.emplace_back(n, v.str(), v.is_integer());
        }
        return out;
    }
};

struct PyGroup {
    FiniteGroup g;

    static PyGroup from_spec(const std::string& spec) { return PyGroup{group_from_spec(parse_spec(spec))}; }

    long order() const { return g.order(); }
    long exp() const { return g.exponent(); }
    std::string char_table() const { return serialize_char_table(dixon_char_table(g)); }
    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (long i = 0; i < g.order(); ++i) out.push_back(g.label(i));
        return out;
    }
};

std::string py_run_check(const std::string& instance_spec, const std::string& check) {
    InstanceSpec inst = InstanceSpec::from_json(parse_spec(instance_spec));
    return reports_to_json(run_check(inst, check));
}

std::string py_verify_census(const std::string& check, long jobs) {
    return reports_to_json(run_checks(builtin_census(), check, jobs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Frobenius-Schur indicator computations for semisimple Hopf algebras";

    py::register_exception<SpecError>(m, "SpecError");
    py::register_exception<hopfind::ParseError>(m, "ScalarParseError");

    m.def("cyc_eval", [](const std::string& text) { return CycScalar::from_string(text).str(); },
          "evaluate a cyclotomic scalar expression to canonical form");

    py::class_<PyHopf>(m, "HopfAlgebra")
        .def_static("from_spec", &PyHopf::from_spec, py::arg("spec_json"))
        .def_property_readonly("dim", &PyHopf::dim)
        .def("labels", &PyHopf::labels)
        .def("validate", &PyHopf::validate, "list of violated Hopf axioms; empty when valid")
        .def("exponent", &PyHopf::exp)
        .def("fs_exponent", &PyHopf::fsexp)
        .def("dual", &PyHopf::dual)
        .def("variant", &PyHopf::variant, py::arg("flip_mul"), py::arg("flip_comul"))
        .def("indicator", &PyHopf::indicator, py::arg("module_spec_json"), py::arg("n"))
        .def("regular_indicators", &PyHopf::regular_indicators, py::arg("n_max") = 0)
        .def("serialize", &PyHopf::serialize);

    py::class_<PyGroup>(m, "FiniteGroup")
        .def_static("from_spec", &PyGroup::from_spec, py::arg("spec_json"))
        .def_property_readonly("order", &PyGroup::order)
        .def("exponent", &PyGroup::exp)
        .def("labels", &PyGroup::labels)
        .def("char_table", &PyGroup::char_table, "serialized exact character table");

    m.def("builtin_census", [] { return census_to_json(builtin_census()).dump(1); });
    m.def("run_check", &py_run_check, py::arg("instance_spec_json"), py::arg("check"));
    m.def("verify_census", &py_verify_census, py::arg("check") = "all", py::arg("jobs") = 1);
    m.def("known_checks", [] { return known_checks(); });
}
