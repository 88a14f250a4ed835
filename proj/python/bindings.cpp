#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hatkit/alternating.hpp"
#include "hatkit/automorphism.hpp"
#include "hatkit/census.hpp"
#include "hatkit/cover.hpp"
#include "hatkit/dart.hpp"
#include "hatkit/error.hpp"
#include "hatkit/suites.hpp"

namespace py = pybind11;
using namespace hat;

namespace {

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string dump(const json& j) { return j.dump(); }

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    return Graph::from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges));
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g)
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& e : g.edges())
        out.emplace_back(e.u, e.v);
    return out;
}

PermGroup group_from(const Graph& g, const std::optional<std::vector<std::vector<Vertex>>>& generators)
{
    if (!generators)
        return automorphism_group(g);
    std::vector<Permutation> gens;
    for (const auto& images : *generators)
        gens.emplace_back(images);
    return schreier_sims(g.order(), gens);
}

std::string alternating(const Graph& g, const std::optional<std::vector<std::vector<Vertex>>>& generators)
{
    PermGroup group = group_from(g, generators);
    auto [d, rev] = induced_orientation(group, g);
    AltDecomposition dec = alternating_cycles(g, d);
    json j = dec;
    j["orientation"] = json::array();
    for (const Arc& a : d.arcs())
        j["orientation"].push_back({a.tail, a.head});
    return dump(j);
}

std::string analyze(const std::string& input, const std::string& census, bool strict)
{
    auto entries = resolve_input(input, load_census(census));
    std::vector<Violation> violations;
    RunOptions options;
    options.strict = strict;
    json out = json::array();
    for (const auto& e : entries)
        out.push_back(analyze_graph(e.name, e.graph, options, violations));
    json j{{"results", out}, {"violations", violations}};
    return dump(j);
}

std::pair<Graph, std::string> dart(const Graph& base)
{
    DartGraph d = dart_graph(base);
    json j{{"labeling", d.labeling}};
    PermGroup aut = automorphism_group(base);
    if (transitivity_report(aut, base).two_arc_transitive)
        j["forward"] = verify_dart_forward(base, aut);
    return {d.graph, dump(j)};
}

std::string verify(const std::string& suite, const std::string& census, std::size_t jobs, bool strict)
{
    auto s = parse_suite(suite);
    if (!s)
        throw Error(ErrorKind::UnknownInput, "unknown suite " + suite);
    RunOptions options;
    options.jobs = jobs;
    options.strict = strict;
    return dump(run_suite(*s, load_census(census), census, options).to_json(false));
}

std::string cover(const Graph& g, const std::optional<std::vector<std::vector<Vertex>>>& generators)
{
    return dump(json(cover_pipeline(g, group_from(g, generators))));
}

} // namespace

PYBIND11_MODULE(_hatkit, m)
{
    m.doc() = "hatkit core bindings";

    static py::exception<Error> hat_error(m, "HatError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(hat_error, e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &edge_pairs)
        .def("neighbours", [](const Graph& g, Vertex v) {
            auto n = g.neighbours(v);
            return std::vector<Vertex>(n.begin(), n.end());
        })
        .def("adjacent", &Graph::adjacent)
        .def("to_graph6", [](const Graph& g) { return write_graph6(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
        });

    m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
    m.def("write_graph6", &write_graph6);
    m.def("census", [] {
        std::vector<std::pair<std::string, Graph>> out;
        for (auto& e : builtin_census())
            out.emplace_back(e.name, e.graph);
        return out;
    });
    m.def("resolve", [](const std::string& input) { return resolve_input(input, builtin_census()).at(0).graph; });

    m.def("is_bipartite", &is_bipartite);
    m.def("girth", &girth);
    m.def("line_graph", [](const Graph& g) { return line_graph(g).graph; });
    m.def("bipartite_double", &bipartite_double);
    m.def("wreath_graph", &wreath_graph);

    m.def("automorphism_group_order", [](const Graph& g) { return to_decimal(automorphism_group(g).order()); });
    m.def("automorphism_generators", [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& s : automorphism_group(g).generators())
            out.emplace_back(s.images().begin(), s.images().end());
        return out;
    });
    m.def("is_isomorphic", [](const Graph& a, const Graph& b) { return is_isomorphic(a, b).has_value(); });
    m.def("canonical_certificate", [](const Graph& g) { return canonical_form(g).certificate; });
    m.def("transitivity_json", [](const Graph& g, const std::optional<std::vector<std::vector<Vertex>>>& gens) {
        return dump(json(transitivity_report(group_from(g, gens), g)));
    }, py::arg("graph"), py::arg("generators") = py::none());

    m.def("alternating_json", &alternating, py::arg("graph"), py::arg("generators") = py::none());
    m.def("dart_graph", &dart);
    m.def("cover_json", &cover, py::arg("graph"), py::arg("generators") = py::none());
    m.def("analyze_json", &analyze, py::arg("input"), py::arg("census") = "builtin", py::arg("strict") = false);
    m.def("verify_json", &verify, py::arg("suite"), py::arg("census") = "builtin", py::arg("jobs") = 1,
          py::arg("strict") = false);
    m.attr("__version__") = std::string(version());
}
