#pragma once

// Test-only oracles, deliberately independent of the library's compute paths:
// eigenvalues come from closed-form characteristic polynomials instead of the
// Jacobi sweep, distances from Floyd-Warshall instead of BFS, bipartiteness
// from exhaustive 2-coloring.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wle/graph.hpp"

namespace oracle {

inline std::vector<double> eigenvalues_2x2(double a, double b, double d) {
    const double mid = (a + d) / 2.0;
    const double rad = std::sqrt(((a - d) / 2.0) * ((a - d) / 2.0) + b * b);
    return {mid + rad, mid - rad};
}

// Roots of det(M - xI) for symmetric 3x3 via the trigonometric cubic formula.
inline std::vector<double> eigenvalues_3x3(const std::array<std::array<double, 3>, 3>& m) {
    const double b = -(m[0][0] + m[1][1] + m[2][2]);
    const double c = m[0][0] * m[1][1] + m[0][0] * m[2][2] + m[1][1] * m[2][2] -
                     m[0][1] * m[0][1] - m[0][2] * m[0][2] - m[1][2] * m[1][2];
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[1][2]) -
                       m[0][1] * (m[0][1] * m[2][2] - m[1][2] * m[0][2]) +
                       m[0][2] * (m[0][1] * m[1][2] - m[1][1] * m[0][2]);
    const double d = -det;

    // Depressed cubic y^3 + p y + q, x = y - b/3. Symmetric input keeps p <= 0.
    const double p = c - b * b / 3.0;
    const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    std::vector<double> roots;
    if (p > -1e-14) {
        roots = {-b / 3.0, -b / 3.0, -b / 3.0};
    } else {
        const double amp = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * amp), -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots.push_back(amp * std::cos(theta - 2.0 * M_PI * k / 3.0) - b / 3.0);
    }
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

inline std::vector<double> symmetric_eigenvalues_small(const std::vector<std::vector<double>>& m) {
    if (m.size() == 1) return {m[0][0]};
    if (m.size() == 2) return eigenvalues_2x2(m[0][0], m[0][1], m[1][1]);
    if (m.size() == 3)
        return eigenvalues_3x3({{{m[0][0], m[0][1], m[0][2]},
                                 {m[1][0], m[1][1], m[1][2]},
                                 {m[2][0], m[2][1], m[2][2]}}});
    throw std::invalid_argument("closed-form oracle only covers n <= 3");
}

inline double abs_deviation_sum(const std::vector<double>& values, double center) {
    double total = 0.0;
    for (double v : values) total += std::abs(v - center);
    return total;
}

inline std::vector<std::vector<double>> adjacency_rows(const wle::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (const auto& [u, v] : g.edges()) {
        rows[u][v] = 1.0;
        rows[v][u] = 1.0;
    }
    return rows;
}

inline std::vector<std::vector<double>> laplacian_rows(const wle::Graph& g,
                                                       const std::vector<double>& w) {
    auto rows = adjacency_rows(g);
    for (auto& row : rows)
        for (double& x : row) x = -x;
    for (int v = 0; v < g.vertex_count(); ++v) rows[v][v] = w[static_cast<std::size_t>(v)];
    return rows;
}

// E(G) for n <= 3 straight from characteristic polynomial roots.
inline double graph_energy_small(const wle::Graph& g) {
    return abs_deviation_sum(symmetric_eigenvalues_small(adjacency_rows(g)), 0.0);
}

inline double laplacian_energy_small(const wle::Graph& g, const std::vector<double>& w) {
    const double mean = std::accumulate(w.begin(), w.end(), 0.0) / static_cast<double>(w.size());
    return abs_deviation_sum(symmetric_eigenvalues_small(laplacian_rows(g, w)), mean);
}

// All-pairs distances via Floyd-Warshall; -1 marks unreachable pairs.
inline std::vector<std::vector<int>> floyd_warshall(const wle::Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x >= inf) x = -1;
    return d;
}

// Exhaustive 2-coloring search, usable up to ~20 vertices.
inline bool bipartite_by_enumeration(const wle::Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

inline long long wiener_by_definition(const wle::Graph& g) {
    const auto d = floyd_warshall(g);
    long long total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (d[u][v] < 0) throw std::invalid_argument("oracle: disconnected");
            total += d[u][v];
        }
    return total;
}

}  // namespace oracle
