#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ggindex/canonical.hpp"
#include "ggindex/enumerate.hpp"
#include "ggindex/extremal.hpp"
#include "ggindex/families.hpp"
#include "ggindex/graph_io.hpp"
#include "ggindex/indices.hpp"
#include "ggindex/report.hpp"

namespace py = pybind11;
using namespace ggindex;

namespace {

Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges)
{
    return Graph(n, std::span<const std::pair<int, int>>(edges));
}

EnumerationOptions enumeration_options(std::optional<int> max_n, int workers)
{
    EnumerationOptions options;
    if (max_n) {
        options.limits = options.limits.with_general(*max_n);
    }
    options.workers = workers > 0 ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return options;
}

Constraints constraints(int n, bool bipartite, bool trees, std::optional<int> max_degree,
                        std::optional<int> cyclomatic)
{
    Constraints c;
    c.n = n;
    c.bipartite_only = bipartite;
    c.trees_only = trees;
    c.max_degree = max_degree;
    c.cyclomatic = cyclomatic;
    return c;
}

std::string verify(const std::string& claim, const std::vector<long long>& ns, double epsilon, int workers,
                   std::optional<int> max_n, std::optional<int> delta, bool delta_is_n_minus_1)
{
    VerifyOptions options;
    options.enumeration = enumeration_options(max_n, workers);
    options.epsilon = epsilon;
    const std::vector<int> small(ns.begin(), ns.end());
    VerificationReport report;
    py::gil_scoped_release release;
    if (claim == "max-bipartite") {
        report = verify_max_bipartite(small, options);
    } else if (claim == "min-bipartite") {
        report = verify_min_bipartite(small, options);
    } else if (claim == "trees") {
        report = verify_tree_extremals(small, options);
    } else if (claim == "crossover") {
        report = verify_crossover(small);
    } else if (claim == "asymptote") {
        report = verify_asymptote(ns);
    } else if (claim == "conjecture1" || claim == "conjecture2" || claim == "conjecture3") {
        const std::optional<int> d = delta_is_n_minus_1 ? std::nullopt : std::optional<int>(delta.value_or(3));
        report = probe_conjecture(claim.back() - '0', small, d, options);
    } else {
        throw std::invalid_argument("unknown claim \"" + claim + "\"");
    }
    return verification_json(report);
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "GG, NGG and ABC indices of connected graphs";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<FamilyError>(m, "FamilyError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<EnumerationRefused>(m, "EnumerationRefused", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def(py::init(&from_pairs), py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& e : g.edges()) {
                                       out.emplace_back(e.u, e.v);
                                   }
                                   return out;
                               })
        .def("degree_sequence", &Graph::degree_sequence)
        .def("is_bipartite", [](const Graph& g) { return is_bipartite(g); })
        .def("is_tree", &Graph::is_tree)
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def("canonical_graph6", [](const Graph& g) { return canonical_form(g).graph6(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.def("gg_index", &gg_index, py::arg("graph"));
    m.def("ngg_index", &ngg_index, py::arg("graph"));
    m.def("abc_index", &abc_index, py::arg("graph"));
    m.def(
        "edge_splits",
        [](const Graph& g) {
            std::vector<std::tuple<int, int, int, int>> out;
            for (const auto& s : edge_splits(g)) {
                out.emplace_back(s.edge.u, s.edge.v, s.n_u, s.n_v);
            }
            return out;
        },
        py::arg("graph"));
    m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));
    m.def("read_graphs", [](const std::string& text) {
        std::istringstream in(text);
        return read_graphs(in);
    });

    m.def("family", [](const std::string& spec) { return construct(FamilySpec::parse(spec)); }, py::arg("spec"));
    m.def(
        "ngg_closed_form",
        [](const std::string& spec) -> std::optional<double> {
            const auto parsed = FamilySpec::parse(spec);
            if (!has_ngg_closed_form(parsed)) {
                return std::nullopt;
            }
            return ngg_closed(parsed);
        },
        py::arg("spec"));

    m.def(
        "enumerate_graph6",
        [](int n, bool bipartite, bool trees, std::optional<int> max_degree, std::optional<int> cyclomatic,
           std::optional<int> max_n, int workers) {
            const auto c = constraints(n, bipartite, trees, max_degree, cyclomatic);
            const auto options = enumeration_options(max_n, workers);
            std::vector<std::string> out;
            {
                py::gil_scoped_release release;
                for (const auto& item : enumerate_connected(c, options)) {
                    out.push_back(item.form.graph6());
                }
            }
            return out;
        },
        py::arg("n"), py::kw_only(), py::arg("bipartite") = false, py::arg("trees") = false,
        py::arg("max_degree") = py::none(), py::arg("cyclomatic") = py::none(), py::arg("max_n") = py::none(),
        py::arg("workers") = 0);
    m.def(
        "count_graphs",
        [](int n, bool bipartite, bool trees, std::optional<int> max_degree, std::optional<int> cyclomatic,
           std::optional<int> max_n, int workers) {
            const auto c = constraints(n, bipartite, trees, max_degree, cyclomatic);
            const auto options = enumeration_options(max_n, workers);
            py::gil_scoped_release release;
            return count_classes(c, options);
        },
        py::arg("n"), py::kw_only(), py::arg("bipartite") = false, py::arg("trees") = false,
        py::arg("max_degree") = py::none(), py::arg("cyclomatic") = py::none(), py::arg("max_n") = py::none(),
        py::arg("workers") = 0);

    m.def("verify_json", &verify, py::arg("claim"), py::arg("ns"), py::arg("epsilon") = kDefaultTieTolerance,
          py::arg("workers") = 0, py::arg("max_n") = py::none(), py::arg("delta") = py::none(),
          py::arg("delta_is_n_minus_1") = false);
}
