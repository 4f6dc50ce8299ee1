#include "wle/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wle {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("matrix order must be positive");
    a_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("row " + std::to_string(i) + " has wrong length");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double ij = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double ji = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (ij != ji)
                throw std::invalid_argument("matrix not symmetric: entries (" + std::to_string(i) +
                                            "," + std::to_string(j) + ") and (" + std::to_string(j) +
                                            "," + std::to_string(i) + ") differ");
            m.a_[m.index(i, j)] = ij;
        }
    return m;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

std::vector<std::vector<double>> SymMatrix::rows() const {
    std::vector<std::vector<double>> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n_));
        for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = at(i, j);
    }
    return out;
}

double Spectrum::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double Spectrum::sum_of_squares() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return s;
}

namespace {

constexpr double kOffNormFactor = 1e-12;
constexpr int kSweepCap = 100;

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) {
                const double v = a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
                s += v * v;
            }
    return std::sqrt(s);
}

}  // namespace

Spectrum symmetric_eigenvalues(const SymMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("matrix not symmetric: entries (" + std::to_string(i) +
                                            "," + std::to_string(j) + ") differ");

    const std::size_t nn = static_cast<std::size_t>(n);
    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> vec(nn * nn, 0.0);  // accumulated rotations, column k = eigenvector k
    for (int i = 0; i < n; ++i) vec[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(i)] = 1.0;

    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)]; };
    auto V = [&](int i, int j) -> double& { return vec[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)]; };

    const double threshold = kOffNormFactor * m.frobenius_norm();
    int sweeps = 0;
    while (off_diagonal_norm(a, n) > threshold) {
        if (sweeps == kSweepCap)
            throw std::runtime_error("Jacobi eigensolver did not converge after " +
                                     std::to_string(kSweepCap) + " sweeps; off-diagonal norm " +
                                     std::to_string(off_diagonal_norm(a, n)));
        ++sweeps;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = A(p, p), aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = akp - s * (akq + tau * akp);
                    A(p, k) = A(k, p);
                    A(k, q) = akq + s * (akp - tau * akq);
                    A(q, k) = A(k, q);
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = vkp - s * (vkq + tau * vkp);
                    V(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return A(x, x) > A(y, y); });

    Spectrum spectrum;
    spectrum.sweeps = sweeps;
    spectrum.values.resize(nn);
    for (int k = 0; k < n; ++k) spectrum.values[static_cast<std::size_t>(k)] = A(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);

    // Residual check on a small sample of eigenpairs against the original matrix.
    const int samples[] = {0, n / 4, n / 2, (3 * n) / 4, n - 1};
    double worst = 0.0;
    for (int idx : samples) {
        const int col = order[static_cast<std::size_t>(idx)];
        const double lambda = A(col, col);
        for (int i = 0; i < n; ++i) {
            double mv = 0.0;
            for (int j = 0; j < n; ++j) mv += m.at(i, j) * V(j, col);
            worst = std::max(worst, std::abs(mv - lambda * V(i, col)));
        }
    }
    spectrum.max_residual = worst;
    return spectrum;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix m(g.vertex_count());
    for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
    return m;
}

SymMatrix weighted_laplacian(const Graph& g, std::span<const double> w) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector length " + std::to_string(w.size()) +
                                    " does not match vertex count " + std::to_string(n));
    SymMatrix m(n);
    for (int v = 0; v < n; ++v) m.set(v, v, w[static_cast<std::size_t>(v)]);
    for (const auto& [u, v] : g.edges()) m.set(u, v, -1.0);
    return m;
}

SymMatrix weighted_laplacian(const Graph& g, const WeightVector& w) {
    return weighted_laplacian(g, std::span<const double>(w.values));
}

SymMatrix signless_weighted_laplacian(const Graph& g, std::span<const double> w) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight vector length " + std::to_string(w.size()) +
                                    " does not match vertex count " + std::to_string(n));
    SymMatrix m(n);
    for (int v = 0; v < n; ++v) m.set(v, v, w[static_cast<std::size_t>(v)]);
    for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
    return m;
}

SymMatrix signless_weighted_laplacian(const Graph& g, const WeightVector& w) {
    return signless_weighted_laplacian(g, std::span<const double>(w.values));
}

}  // namespace wle
