#pragma once

#include <span>
#include <vector>

#include "wle/graph.hpp"
#include "wle/weights.hpp"

namespace wle {

// Dense symmetric matrix. Mutation goes through set(), which writes both
// triangles, so stored entries are mirror-exact by construction.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    // Validates exact symmetry; rejects ragged or asymmetric input naming the
    // first differing entry pair.
    static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

    int order() const noexcept { return n_; }
    double at(int i, int j) const { return a_[index(i, j)]; }
    void set(int i, int j, double value) {
        a_[index(i, j)] = value;
        a_[index(j, i)] = value;
    }

    double trace() const;
    double frobenius_norm() const;
    std::vector<std::vector<double>> rows() const;
    std::span<const double> data() const noexcept { return a_; }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }
    int n_ = 0;
    std::vector<double> a_;
};

struct Spectrum {
    std::vector<double> values;  // sorted descending
    double max_residual = 0.0;   // max |Mv - lambda v|_inf over sampled eigenpairs
    int sweeps = 0;
    double sum() const;
    double sum_of_squares() const;
};

// Cyclic-by-row Jacobi rotations. Stops once the off-diagonal Frobenius norm
// drops below 1e-12 * |M|_F, errors after 100 sweeps carrying the achieved
// off-norm. Eigenvalues come back sorted descending, ties adjacent.
Spectrum symmetric_eigenvalues(const SymMatrix& m);

SymMatrix adjacency_matrix(const Graph& g);

// diag(w) - A(G); rejects a weight whose length differs from the order.
SymMatrix weighted_laplacian(const Graph& g, std::span<const double> w);
SymMatrix weighted_laplacian(const Graph& g, const WeightVector& w);

// diag(w) + A(G).
SymMatrix signless_weighted_laplacian(const Graph& g, std::span<const double> w);
SymMatrix signless_weighted_laplacian(const Graph& g, const WeightVector& w);

}  // namespace wle
