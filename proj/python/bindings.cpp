#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wle/energy.hpp"
#include "wle/generators.hpp"
#include "wle/graph.hpp"
#include "wle/spectra.hpp"
#include "wle/verify.hpp"
#include "wle/weights.hpp"

namespace py = pybind11;
using namespace wle;

namespace {

WeightKind kind_arg(const std::string& name) {
    const auto kind = weight_kind_from_name(name);
    if (!kind) throw std::invalid_argument("unknown weight kind: " + name);
    return *kind;
}

std::vector<std::vector<int>> distance_rows(const Graph& g) {
    const DistanceMatrix d = distance_matrix(g);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(d.order()));
    for (int u = 0; u < d.order(); ++u) {
        rows[static_cast<std::size_t>(u)].resize(static_cast<std::size_t>(d.order()));
        for (int v = 0; v < d.order(); ++v) rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = d.at(u, v);
    }
    return rows;
}

py::dict report_dict(const EnergyReport& report) {
    py::dict out;
    out["n"] = report.n;
    out["m"] = report.m;
    out["connected"] = report.connected;
    out["bipartite"] = report.bipartite;
    out["adjacency_energy"] = report.adjacency_energy;
    py::dict kinds;
    for (WeightKind kind : all_weight_kinds) {
        const auto& entry = report.entry(kind);
        py::dict row;
        row["laplacian_energy"] = entry.laplacian_energy;
        row["mean_weight"] = entry.mean_weight;
        row["n_mean_deviation"] = entry.n_mean_deviation;
        kinds[weight_kind_name(kind)] = row;
    }
    out["kinds"] = kinds;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graph energy, weighted Laplacian energies, and topological indices";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_static("from_edge_list", &Graph::from_edge_list, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream oss;
            oss << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return oss.str();
        });

    m.def("parse_graph6", [](const std::string& line) { return parse_graph6(line); }, py::arg("line"));
    m.def("to_graph6", &to_graph6, py::arg("graph"));
    m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); }, py::arg("text"));
    m.def("to_edge_list", [](const Graph& g) {
        std::ostringstream oss;
        write_edge_list(g, oss);
        return oss.str();
    }, py::arg("graph"));
    m.def("load_graph_file", &load_graph_file, py::arg("path"));

    m.def("is_connected", &is_connected, py::arg("graph"));
    m.def("distance_matrix", &distance_rows, py::arg("graph"),
          "All-pairs BFS distances as nested lists; raises on disconnected input.");

    py::class_<Bipartition>(m, "Bipartition")
        .def_readonly("bipartite", &Bipartition::bipartite)
        .def_readonly("side", &Bipartition::side)
        .def_readonly("odd_cycle", &Bipartition::odd_cycle);
    m.def("bipartition", &bipartition, py::arg("graph"));

    m.def("generate", [](const std::string& family, int n, int a, int b, int p, int q, double prob,
                         std::uint64_t seed) {
        FamilySpec spec;
        spec.family = family_from_name(family);
        spec.n = n;
        spec.a = a;
        spec.b = b;
        spec.p = p;
        spec.q = q;
        spec.prob = prob;
        spec.seed = seed;
        return generate(spec);
    }, py::arg("family"), py::arg("n") = 0, py::arg("a") = 0, py::arg("b") = 0, py::arg("p") = 0,
       py::arg("q") = 0, py::arg("prob") = 0.5, py::arg("seed") = 0);
    m.def("nanotorus", &nanotorus, py::arg("p"), py::arg("q"));

    py::class_<WeightVector>(m, "WeightVector")
        .def_property_readonly("kind", [](const WeightVector& w) { return weight_kind_name(w.kind); })
        .def_readonly("values", &WeightVector::values)
        .def("mean", &WeightVector::mean);
    m.def("weight_vector", [](const Graph& g, const std::string& kind) {
        return weight_vector(g, kind_arg(kind));
    }, py::arg("graph"), py::arg("kind"));

    m.def("wiener", &wiener, py::arg("graph"));
    m.def("first_zagreb", &first_zagreb, py::arg("graph"));
    m.def("total_eccentricity", &total_eccentricity, py::arg("graph"));
    m.def("radius", &radius, py::arg("graph"));
    m.def("diameter", &diameter, py::arg("graph"));
    m.def("forgotten", &forgotten, py::arg("graph"));

    py::class_<IndexReport>(m, "IndexReport")
        .def_readonly("wiener", &IndexReport::wiener)
        .def_readonly("first_zagreb", &IndexReport::first_zagreb)
        .def_readonly("total_eccentricity", &IndexReport::total_eccentricity)
        .def_readonly("forgotten", &IndexReport::forgotten)
        .def_readonly("radius", &IndexReport::radius)
        .def_readonly("diameter", &IndexReport::diameter);
    m.def("index_report", &index_report, py::arg("graph"));

    m.def("mean_deviation", [](const WeightVector& w) { return mean_deviation(w); }, py::arg("weights"));
    m.def("mean_deviation", [](const std::vector<double>& v) {
        return mean_deviation(std::span<const double>(v));
    }, py::arg("values"));
    m.def("variance", [](const WeightVector& w) { return variance(w); }, py::arg("weights"));
    m.def("variance", [](const std::vector<double>& v) {
        return variance(std::span<const double>(v));
    }, py::arg("values"));
    m.def("is_regular", &is_regular, py::arg("weights"), py::arg("tol") = 1e-9);

    py::class_<SymMatrix>(m, "SymMatrix")
        .def_static("from_rows", &SymMatrix::from_rows, py::arg("rows"))
        .def_property_readonly("order", &SymMatrix::order)
        .def("at", &SymMatrix::at, py::arg("i"), py::arg("j"))
        .def("rows", &SymMatrix::rows)
        .def("trace", &SymMatrix::trace)
        .def("frobenius_norm", &SymMatrix::frobenius_norm);
    m.def("adjacency_matrix", &adjacency_matrix, py::arg("graph"));
    m.def("weighted_laplacian", [](const Graph& g, const WeightVector& w) {
        return weighted_laplacian(g, w);
    }, py::arg("graph"), py::arg("weights"));
    m.def("weighted_laplacian", [](const Graph& g, const std::vector<double>& w) {
        return weighted_laplacian(g, std::span<const double>(w));
    }, py::arg("graph"), py::arg("values"));
    m.def("signless_weighted_laplacian", [](const Graph& g, const WeightVector& w) {
        return signless_weighted_laplacian(g, w);
    }, py::arg("graph"), py::arg("weights"));
    m.def("signless_weighted_laplacian", [](const Graph& g, const std::vector<double>& w) {
        return signless_weighted_laplacian(g, std::span<const double>(w));
    }, py::arg("graph"), py::arg("values"));

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("values", &Spectrum::values)
        .def_readonly("max_residual", &Spectrum::max_residual)
        .def_readonly("sweeps", &Spectrum::sweeps)
        .def("sum", &Spectrum::sum)
        .def("sum_of_squares", &Spectrum::sum_of_squares);
    m.def("symmetric_eigenvalues", &symmetric_eigenvalues, py::arg("matrix"));

    m.def("graph_energy", &graph_energy, py::arg("graph"));
    m.def("laplacian_energy", [](const Graph& g, const std::string& kind) {
        return laplacian_energy(g, kind_arg(kind));
    }, py::arg("graph"), py::arg("kind"));
    m.def("laplacian_energy", [](const Graph& g, const WeightVector& w) {
        return laplacian_energy(g, w);
    }, py::arg("graph"), py::arg("weights"));
    m.def("energy_report", [](const Graph& g) { return report_dict(energy_report(g)); },
          py::arg("graph"));

    py::class_<VerificationRecord>(m, "VerificationRecord")
        .def_readonly("graph_id", &VerificationRecord::graph_id)
        .def_readonly("kind", &VerificationRecord::kind)
        .def_property_readonly("theorem",
                               [](const VerificationRecord& r) { return theorem_name(r.theorem); })
        .def_readonly("left", &VerificationRecord::left)
        .def_readonly("right", &VerificationRecord::right)
        .def_readonly("slack", &VerificationRecord::slack)
        .def_readonly("upper_slack", &VerificationRecord::upper_slack)
        .def_readonly("holds", &VerificationRecord::holds)
        .def_readonly("equality", &VerificationRecord::equality)
        .def_readonly("regular", &VerificationRecord::regular)
        .def_readonly("consistency", &VerificationRecord::consistency)
        .def("to_json", &record_to_json)
        .def("__repr__", &record_to_json);

    m.def("check_upper_bound", [](const Graph& g, const std::string& kind, double tol) {
        return check_upper_bound(g, kind_arg(kind), tol);
    }, py::arg("graph"), py::arg("kind"), py::arg("tol") = 1e-8);
    m.def("check_bipartite_lower", [](const Graph& g, const std::string& kind, double tol) {
        return check_bipartite_lower(g, kind_arg(kind), tol);
    }, py::arg("graph"), py::arg("kind"), py::arg("tol") = 1e-8);
    m.def("check_sandwich", [](const Graph& g, const std::string& kind, double tol) {
        return check_sandwich(g, kind_arg(kind), tol);
    }, py::arg("graph"), py::arg("kind"), py::arg("tol") = 1e-8);
    m.def("check_vt_equality", &check_vt_equality, py::arg("graph"), py::arg("tol") = 1e-8);
}
