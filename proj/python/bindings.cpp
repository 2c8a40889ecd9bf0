#include "nilbu/bu_index.hpp"
#include "nilbu/coverings.hpp"
#include "nilbu/epimorphisms.hpp"
#include "nilbu/homology.hpp"
#include "nilbu/io.hpp"
#include "nilbu/seifert.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace nilbu;

namespace {

// ordered_json -> Python objects through the json module keeps key order.
py::object to_python(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

NilManifold as_manifold(const py::object& obj) {
    if (py::isinstance<NilManifold>(obj))
        return obj.cast<NilManifold>();
    return parse_manifold(obj.cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_nilbu, mod) {
    mod.doc() = "Nil 3-manifolds, their double coverings and Z2-indices";

    auto error = py::register_exception<Error>(mod, "Error", PyExc_ValueError);
    py::register_exception<OverflowError>(mod, "OverflowError", error);
    py::register_exception<ParseError>(mod, "ParseError", error);
    py::register_exception<InvalidInvariant>(mod, "InvalidInvariant", error);
    py::register_exception<NotNilError>(mod, "NotNilError", error);
    py::register_exception<OrientationError>(mod, "OrientationError", error);
    py::register_exception<NotAHomomorphism>(mod, "NotAHomomorphism", error);
    py::register_exception<NotSurjective>(mod, "NotSurjective", error);
    py::register_exception<MoveNotApplicable>(mod, "MoveNotApplicable", error);
    py::register_exception<InvalidCharacter>(mod, "InvalidCharacter", error);

    py::class_<NilManifold>(mod, "Manifold")
        .def(py::init([](const std::string& text) { return parse_manifold(text); }), py::arg("text"))
        .def(py::init([](const std::string& family, Int b, std::vector<Int> params) {
                 const auto f = family_from_tag(family);
                 if (!f)
                     throw ParseError("unknown family '" + family + "'");
                 return NilManifold(*f, b, std::move(params));
             }),
             py::arg("family"), py::arg("b"), py::arg("params") = std::vector<Int>{})
        .def_property_readonly("family", [](const NilManifold& m) { return std::string(family_tag(m.family())); })
        .def_property_readonly("b", &NilManifold::b)
        .def_property_readonly("params", &NilManifold::params)
        .def("seifert", [](const NilManifold& m) { return to_string(m.expand()); })
        .def("euler_number", [](const NilManifold& m) {
            const Rational e = euler_number(m.expand());
            return py::make_tuple(e.numerator(), e.denominator());
        })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const NilManifold& m) { return py::hash(py::str(to_string(m))); })
        .def("__str__", [](const NilManifold& m) { return to_string(m); })
        .def("__repr__", [](const NilManifold& m) { return "Manifold('" + to_string(m) + "')"; });

    py::class_<Z2Char>(mod, "Z2Char")
        .def(py::init([](std::vector<int> s, std::vector<int> v, int h) { return Z2Char{std::move(s), std::move(v), h}; }),
             py::kw_only(), py::arg("s") = std::vector<int>{}, py::arg("v") = std::vector<int>{}, py::arg("h") = 0)
        .def_readwrite("s", &Z2Char::s)
        .def_readwrite("v", &Z2Char::v)
        .def_readwrite("h", &Z2Char::h)
        .def("values", &Z2Char::values)
        .def("to_dict", [](const Z2Char& phi) { return to_python(to_json(phi)); })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def("__hash__", [](const Z2Char& phi) { return py::hash(py::str(to_string(phi))); })
        .def("__repr__", [](const Z2Char& phi) { return "Z2Char(" + to_string(phi) + ")"; });

    mod.def("parse", &parse_manifold, py::arg("text"), "Parse a family name such as '244(0;1,3)' or an SF(...) string.");
    mod.def(
        "classify",
        [](const std::string& text) { return classify(normalize(parse_loose_seifert(text))); },
        py::arg("seifert"), "Name the Nil manifold of an unnormalized SF(...) string.");
    mod.def(
        "h1", [](const py::object& m) { return to_python(to_json(h1(as_manifold(m)))); }, py::arg("manifold"),
        "First homology as a dict with free_rank, torsion and gen_images.");
    mod.def(
        "h1_str", [](const py::object& m) { return describe(h1(as_manifold(m))); }, py::arg("manifold"));
    mod.def(
        "epimorphisms", [](const py::object& m) { return enumerate_epis(as_manifold(m)); }, py::arg("manifold"));
    mod.def(
        "classes",
        [](const py::object& m) {
            std::vector<std::vector<Z2Char>> out;
            for (const auto& cls : equivalence_classes(as_manifold(m)).classes)
                out.push_back(cls.members);
            return out;
        },
        py::arg("manifold"), "Equivalence classes of epimorphisms, each sorted, representative first.");
    mod.def(
        "double_cover", [](const py::object& m, const Z2Char& phi) { return double_cover(as_manifold(m), phi); },
        py::arg("manifold"), py::arg("phi"));
    mod.def(
        "verify_cover",
        [](const py::object& m, const Z2Char& phi, const py::object& claimed) {
            return verify_cover(as_manifold(m), phi, as_manifold(claimed));
        },
        py::arg("manifold"), py::arg("phi"), py::arg("claimed"));
    mod.def(
        "z2_index", [](const py::object& m, const Z2Char& phi) { return z2_index(as_manifold(m), phi); },
        py::arg("manifold"), py::arg("phi"));
    mod.def(
        "coverings",
        [](const py::object& m) {
            py::list out;
            for (const auto& d : coverings_of(as_manifold(m)))
                out.append(to_python(to_json(d)));
            return out;
        },
        py::arg("manifold"), "One covering descriptor per class of the base.");
    mod.def(
        "involutions",
        [](const py::object& m) {
            py::list out;
            for (const auto& d : quotients_of(as_manifold(m)))
                out.append(to_python(to_json(d)));
            return out;
        },
        py::arg("manifold"), "Free involutions of a manifold, as covering descriptors over each quotient.");
}
