#include "wle/energy.hpp"

#include <cmath>

#include "wle/spectra.hpp"

namespace wle {

namespace {

double absolute_deviation_sum(const Spectrum& spectrum, double center) {
    double total = 0.0;
    for (double v : spectrum.values) total += std::abs(v - center);
    return total;
}

}  // namespace

double graph_energy(const Graph& g) {
    return absolute_deviation_sum(symmetric_eigenvalues(adjacency_matrix(g)), 0.0);
}

double laplacian_energy(const Graph& g, const WeightVector& w) {
    const Spectrum spectrum = symmetric_eigenvalues(weighted_laplacian(g, w));
    return absolute_deviation_sum(spectrum, w.mean());
}

double laplacian_energy(const Graph& g, WeightKind kind) {
    return laplacian_energy(g, weight_vector(g, kind));
}

EnergyReport energy_report(const Graph& g) {
    EnergyReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.connected = true;
    const auto dist = distance_matrix(g);  // rejects disconnected input
    report.bipartite = bipartition(g).bipartite;
    report.adjacency_energy = absolute_deviation_sum(symmetric_eigenvalues(adjacency_matrix(g)), 0.0);

    for (WeightKind kind : all_weight_kinds) {
        const WeightVector w = weight_vector(g, kind, dist);
        auto& entry = report.kinds[static_cast<std::size_t>(kind)];
        entry.laplacian_energy = laplacian_energy(g, w);
        entry.mean_weight = w.mean();
        entry.n_mean_deviation = static_cast<double>(report.n) * mean_deviation(w);
    }
    return report;
}

}  // namespace wle
