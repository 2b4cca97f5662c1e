#include "rch/catalog.hpp"
#include "rch/dsl.hpp"
#include "rch/homology.hpp"
#include "rch/invariants.hpp"
#include "rch/oracle.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rch;

namespace {

// Diagrams cross the boundary as DSL text; values as canonical strings or
// plain containers. Keeps the module dependency-free on the Python side.
struct PyDiagram {
    ParsedDiagram parsed;
    PMDiagram pm(bool blow) const {
        if (blow) return blowup(underlying(parsed));
        return as_pm(parsed);
    }
};

PyDiagram parseText(const std::string& text) { return {parse_diagram(text)}; }
PyDiagram parseFile(const std::string& path) { return {parse_diagram_file(path)}; }

std::vector<std::pair<int, std::string>> laurentTerms(const LaurentPoly& p) {
    std::vector<std::pair<int, std::string>> v;
    for (auto& [e, c] : p.terms()) v.push_back({e, to_string(c)});
    return v;
}

}  // namespace

PYBIND11_MODULE(_rch, m) {
    m.doc() = "exact coloring invariants of ribbon diagrams";

    py::register_exception<CapExceeded>(m, "CapExceeded");

    py::class_<PyDiagram>(m, "Diagram")
        .def_static("from_text", &parseText, py::arg("text"))
        .def_static("from_file", &parseFile, py::arg("path"))
        .def_property_readonly("name", [](const PyDiagram& d) { return underlying(d.parsed).name; })
        .def_property_readonly("num_vertices",
                               [](const PyDiagram& d) { return underlying(d.parsed).numVertices(); })
        .def_property_readonly("num_edges",
                               [](const PyDiagram& d) { return underlying(d.parsed).numEdges(); })
        .def_property_readonly("has_matching",
                               [](const PyDiagram& d) { return std::holds_alternative<PMDiagram>(d.parsed); })
        .def("serialize",
             [](const PyDiagram& d) {
                 if (auto* pm = std::get_if<PMDiagram>(&d.parsed)) return serialize(*pm);
                 return serialize(std::get<RibbonDiagram>(d.parsed));
             })
        .def("validate",
             [](const PyDiagram& d) {
                 ValidationReport r = std::holds_alternative<PMDiagram>(d.parsed)
                                          ? validate(std::get<PMDiagram>(d.parsed))
                                          : validate(std::get<RibbonDiagram>(d.parsed));
                 return r.issues;
             })
        .def("blowup",
             [](const PyDiagram& d) { return PyDiagram{ParsedDiagram(blowup(underlying(d.parsed)))}; })
        .def("surface_stats", [](const PyDiagram& d) {
            SurfaceStats s = surface_stats(underlying(d.parsed));
            py::dict out;
            out["faces"] = s.faces;
            out["euler"] = s.eulerCharacteristic;
            out["orientable"] = s.orientable;
            out["genus"] = s.genus;
            out["crosscaps"] = s.crosscaps;
            return out;
        });

    m.def(
        "n_color_polynomial",
        [](const PyDiagram& d, int n, bool blow) {
            return laurentTerms(n_color_polynomial(d.pm(blow), n));
        },
        py::arg("diagram"), py::arg("n"), py::arg("blowup") = false,
        "terms of the state-sum polynomial as (exponent, coefficient) pairs");

    m.def(
        "n_color_number",
        [](const PyDiagram& d, int n, bool blow) { return to_string(n_color_number(d.pm(blow), n)); },
        py::arg("diagram"), py::arg("n"), py::arg("blowup") = false);

    m.def(
        "penrose_polynomial",
        [](const PyDiagram& d) {
            std::vector<std::pair<int, std::string>> v;
            for (auto& [e, c] : penrose_polynomial(underlying(d.parsed)).terms())
                v.push_back({e, to_string(c)});
            return v;
        },
        py::arg("diagram"));

    m.def(
        "bigraded_homology",
        [](const PyDiagram& d, int n, bool blow) {
            std::vector<std::tuple<int, int, long>> v;
            for (auto& [ij, dim] : bigraded_homology(d.pm(blow), n))
                v.push_back({ij.first, ij.second, dim});
            return v;
        },
        py::arg("diagram"), py::arg("n"), py::arg("blowup") = false);

    m.def(
        "filtered_homology",
        [](const PyDiagram& d, int n, bool blow) {
            std::vector<std::pair<int, long>> v;
            for (auto& [i, dim] : filtered_homology(d.pm(blow), n)) v.push_back({i, dim});
            return v;
        },
        py::arg("diagram"), py::arg("n"), py::arg("blowup") = false);

    m.def(
        "total_face_color",
        [](const PyDiagram& d, int n, bool viaLinearAlgebra) {
            std::vector<std::pair<int, std::string>> v;
            for (auto& [e, c] : total_face_color_at(underlying(d.parsed), n,
                                                    viaLinearAlgebra ? TfcPath::LinearAlgebra
                                                                     : TfcPath::Oracle)
                                    .terms())
                v.push_back({e, to_string(c)});
            return v;
        },
        py::arg("diagram"), py::arg("n"), py::arg("via_linear_algebra") = false);

    m.def(
        "spectral_invariant",
        [](const PyDiagram& d, int n, bool blow) { return spectral_invariant(d.pm(blow), n); },
        py::arg("diagram"), py::arg("n"), py::arg("blowup") = false);

    m.def(
        "edge_coloring_count",
        [](const PyDiagram& d) { return to_string(edge_coloring_count(underlying(d.parsed))); },
        py::arg("diagram"));

    m.def("catalog_list", []() { return catalog_list(); });
    m.def(
        "catalog_diagram",
        [](const std::string& name) { return PyDiagram{catalog_load(catalog_get(name))}; },
        py::arg("name"));
}
