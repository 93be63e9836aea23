#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistcond/counting.hpp"
#include "twistcond/errors.hpp"
#include "twistcond/io.hpp"
#include "twistcond/oracle.hpp"

namespace py = pybind11;
using namespace twistcond;

namespace {

// Structured results cross the boundary as plain dicts and lists.
py::object to_py(const io::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::Json from_py(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return io::parse_text(obj.cast<std::string>());
    return io::parse_text(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

std::map<std::int64_t, u64> counts(const oracle::Histogram& h) { return h.counts; }

} // namespace

PYBIND11_MODULE(twistcond, m) {
    m.doc() = "Conductors of character twists of GL(n) representations over p-adic fields";

    py::register_exception<io::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", PyExc_RuntimeError);

    py::class_<LocalFieldParams>(m, "LocalField")
        .def_readonly("p", &LocalFieldParams::p)
        .def_readonly("f", &LocalFieldParams::f)
        .def_readonly("q", &LocalFieldParams::q)
        .def("__eq__", [](const LocalFieldParams& a, const LocalFieldParams& b) { return a == b; })
        .def("__repr__", [](const LocalFieldParams& F) {
            return "LocalField(p=" + std::to_string(F.p) + ", f=" + std::to_string(F.f) + ")";
        });
    m.def("make_field", &make_field, py::arg("p"), py::arg("f") = 1);

    py::class_<CharacterX>(m, "Character")
        .def_property_readonly("field", &CharacterX::field)
        .def_property_readonly("conductor", &CharacterX::conductor)
        .def_property_readonly("exponents", &CharacterX::exponents)
        .def("exponents_at", &CharacterX::exponents_at)
        .def("is_trivial", &CharacterX::is_trivial)
        .def("inverse", [](const CharacterX& c) { return inverse(c); })
        .def("__mul__", [](const CharacterX& a, const CharacterX& b) { return multiply(a, b); })
        .def("__pow__", [](const CharacterX& c, std::int64_t k) { return power(c, k); })
        .def("__eq__", [](const CharacterX& a, const CharacterX& b) { return a == b; })
        .def("__hash__", [](const CharacterX& c) { return py::hash(py::make_tuple(c.conductor(), c.exponents())); })
        .def("to_json", [](const CharacterX& c) { return to_py(io::to_json(c)); })
        .def("__repr__", [](const CharacterX& c) { return "Character(" + io::to_json(c).dump() + ")"; });

    m.def("character", [](const LocalFieldParams& F, u64 level, const std::vector<std::int64_t>& e) {
        return from_exponents(F, level, e);
    }, py::arg("field"), py::arg("level"), py::arg("exponents"));
    m.def("cyclic_character", &from_cyclic_exponent, py::arg("field"), py::arg("level"), py::arg("exponent"));
    m.def("trivial_character", &trivial_character);
    m.def("character_from_json", [](const LocalFieldParams& F, const py::object& j) {
        return io::character_from_json(F, from_py(j));
    });
    m.def("enumerate_X", &enumerate_X, py::arg("field"), py::arg("k"), py::arg("limit") = kDefaultEnumerationLimit);
    m.def("enumerate_Xprime", &enumerate_Xprime, py::arg("field"), py::arg("k"),
          py::arg("limit") = kDefaultEnumerationLimit);
    m.def("count_X", &count_X, py::arg("q"), py::arg("k"));
    m.def("count_Xprime", &count_Xprime, py::arg("q"), py::arg("k"));

    py::class_<QuasiSquareIntegrable>(m, "Atom")
        .def(py::init(&QuasiSquareIntegrable::make), py::arg("n"), py::arg("label"), py::arg("a_min"),
             py::arg("mu"), py::arg("omega_min") = std::nullopt)
        .def_static("from_character", &QuasiSquareIntegrable::character)
        .def_property_readonly("n", &QuasiSquareIntegrable::rank)
        .def_property_readonly("label", &QuasiSquareIntegrable::minimal_label)
        .def_property_readonly("a_min", &QuasiSquareIntegrable::minimal_conductor)
        .def_property_readonly("mu", &QuasiSquareIntegrable::mu)
        .def_property_readonly("omega_min", &QuasiSquareIntegrable::omega_min)
        .def_property_readonly("conductor", &QuasiSquareIntegrable::conductor)
        .def("is_twist_minimal", &QuasiSquareIntegrable::is_twist_minimal)
        .def("__eq__", [](const QuasiSquareIntegrable& a, const QuasiSquareIntegrable& b) { return a == b; });

    py::class_<Representation>(m, "Representation")
        .def(py::init<std::vector<QuasiSquareIntegrable>>(), py::arg("components"))
        .def_static("from_json", [](const py::object& j) { return io::representation_from_json(from_py(j)); })
        .def("to_json", [](const Representation& pi) { return to_py(io::to_json(pi)); })
        .def_property_readonly("components", &Representation::components)
        .def_property_readonly("field", &Representation::field)
        .def_property_readonly("rank", &Representation::rank)
        .def_property_readonly("conductor", &Representation::conductor)
        .def("__add__", &boxplus)
        .def("__eq__", [](const Representation& a, const Representation& b) { return a == b; });

    m.def("twisted_conductor", &twisted_conductor, py::arg("pi"), py::arg("chi"));
    m.def("twist", [](const Representation& pi, const CharacterX& chi) {
        return to_py(io::to_json(pi, chi, delta_terms(pi, chi)));
    }, py::arg("pi"), py::arg("chi"), "Twisted conductor with its Delta/delta breakdown.");
    m.def("conductor_bounds", [](const Representation& pi, u64 a_chi) {
        const auto b = conductor_bounds(pi, a_chi);
        return py::make_tuple(b.lower, b.upper);
    });
    m.def("bh_bound", &bh_bound, py::arg("a_pi"), py::arg("a_chi"), py::arg("n"));
    m.def("dominant_conductor", &dominant_conductor, py::arg("pi"), py::arg("a_chi"));
    m.def("twist_fixing_bound", [](const Representation& pi, u64 k, u64 j) {
        return to_py(io::to_json(twist_fixing_bound(pi, k, j)));
    }, py::arg("pi"), py::arg("k"), py::arg("j"));
    m.def("interference", [](const Representation& pi, const CharacterX& chi) {
        return to_py(io::to_json(interference_predicate(pi, chi)));
    }, py::arg("pi"), py::arg("chi"));
    m.def("level_from_conductor", &level_from_conductor);
    m.def("conductor_from_level", &conductor_from_level);
    m.def("norm_pullback_level", &norm_pullback_level);
    m.def("epsilon_exponent", &epsilon_exponent, py::arg("pi"), py::arg("n_psi"));
    m.def("central_character", &central_character);

    m.def("histogram", [](const Representation& pi, u64 k, u64 limit) {
        return counts(oracle::histogram_twisted_conductor(pi, k, limit));
    }, py::arg("pi"), py::arg("k"), py::arg("limit") = kDefaultEnumerationLimit);
    m.def("delta_histogram", [](const QuasiSquareIntegrable& atom, u64 k, u64 limit) {
        return counts(oracle::delta_histogram(atom, k, limit));
    }, py::arg("atom"), py::arg("k"), py::arg("limit") = kDefaultEnumerationLimit);
    m.def("verify", [](const py::object& config) {
        const auto grid = config.is_none() ? oracle::default_config() : io::grid_config_from_json(from_py(config));
        return to_py(io::to_json(oracle::verify_grid(grid)));
    }, py::arg("config") = py::none());
}
