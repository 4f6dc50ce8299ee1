#pragma once

#include <array>

#include "wle/graph.hpp"
#include "wle/weights.hpp"

namespace wle {

// Ordinary graph energy: sum of absolute adjacency eigenvalues.
double graph_energy(const Graph& g);

// Weighted Laplacian energy sum_i |mu_i - mean(w)| for the eigenvalues mu of
// diag(w) - A(G).
double laplacian_energy(const Graph& g, WeightKind kind);
double laplacian_energy(const Graph& g, const WeightVector& w);

struct EnergyReport {
    struct KindEntry {
        double laplacian_energy = 0.0;
        double mean_weight = 0.0;
        double n_mean_deviation = 0.0;  // n * MD of the weight vector
    };

    int n = 0;
    int m = 0;
    bool connected = false;
    bool bipartite = false;
    double adjacency_energy = 0.0;
    std::array<KindEntry, all_weight_kinds.size()> kinds;  // indexed in all_weight_kinds order

    const KindEntry& entry(WeightKind kind) const {
        return kinds[static_cast<std::size_t>(kind)];
    }
};

// All six Laplacian energies plus E(G), computed from one distance matrix and
// one adjacency spectrum. Requires a connected graph so tr and ecc exist.
EnergyReport energy_report(const Graph& g);

}  // namespace wle
