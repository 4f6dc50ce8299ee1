#include "wle/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "wle/rng.hpp"

namespace wle {

namespace {

constexpr int kRejectionCap = 10000;

[[noreturn]] void bad_param(const std::string& what) {
    throw std::invalid_argument("generator parameter out of range: " + what);
}

Graph path_graph(int n) {
    if (n < 1) bad_param("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) bad_param("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) bad_param("complete needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) bad_param("complete_bipartite needs a,b >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edge_list(a + b, edges);
}

Graph star_graph(int n) {
    if (n < 1) bad_param("star needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(n, edges);
}

// Uniform labeled tree by decoding a random Pruefer sequence.
Graph random_tree_graph(int n, std::uint64_t seed) {
    if (n < 1) bad_param("random_tree needs n >= 1");
    if (n == 1) return Graph::from_edge_list(1, {});
    if (n == 2) return Graph::from_edge_list(2, {{0, 1}});

    SplitMix64 rng(seed);
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (int& x : pruefer) x = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    std::vector<int> remaining_degree(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++remaining_degree[static_cast<std::size_t>(x)];

    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (remaining_degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);

    std::vector<std::pair<int, int>> edges;
    for (int x : pruefer) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, x);
        if (--remaining_degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    const int u = *leaves.begin();
    const int v = *std::next(leaves.begin());
    edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph random_connected_graph(int n, double prob, std::uint64_t seed) {
    if (n < 1) bad_param("random_connected needs n >= 1");
    if (!(prob > 0.0) || prob > 1.0) bad_param("random_connected needs 0 < prob <= 1");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_double() < prob) edges.emplace_back(u, v);
        Graph g = Graph::from_edge_list(n, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected: no connected sample within 10000 attempts");
}

Graph random_bipartite_graph(int a, int b, double prob, std::uint64_t seed) {
    if (a < 1 || b < 1) bad_param("random_bipartite needs a,b >= 1");
    if (!(prob > 0.0) || prob > 1.0) bad_param("random_bipartite needs 0 < prob <= 1");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                if (rng.next_double() < prob) edges.emplace_back(u, a + v);
        Graph g = Graph::from_edge_list(a + b, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_bipartite: no connected sample within 10000 attempts");
}

}  // namespace

Graph nanotorus(int p, int q) {
    if (p < 2) bad_param("nanotorus needs p >= 2 (p=1 collapses the row cycle)");
    if (q < 1) bad_param("nanotorus needs q >= 1");
    const int cols = 2 * p;
    const int rows = 2 * q;
    auto id = [cols](int i, int j) { return j * cols + i; };

    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
            edges.emplace_back(id(i, j), id((i + 1) % cols, j));
            if ((i + j) % 2 == 0) edges.emplace_back(id(i, j), id(i, (j + 1) % rows));
        }
    return Graph::from_edge_list(4 * p * q, edges);
}

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::star: return "star";
        case Family::random_connected: return "random_connected";
        case Family::random_tree: return "random_tree";
        case Family::random_bipartite: return "random_bipartite";
        case Family::nanotorus: return "nanotorus";
    }
    return "?";
}

Family family_from_name(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "star") return Family::star;
    if (name == "random_connected") return Family::random_connected;
    if (name == "random_tree") return Family::random_tree;
    if (name == "random_bipartite") return Family::random_bipartite;
    if (name == "nanotorus") return Family::nanotorus;
    throw std::invalid_argument("unknown graph family: " + std::string(name));
}

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return path_graph(spec.n);
        case Family::cycle: return cycle_graph(spec.n);
        case Family::complete: return complete_graph(spec.n);
        case Family::complete_bipartite: return complete_bipartite_graph(spec.a, spec.b);
        case Family::star: return star_graph(spec.n);
        case Family::random_connected: return random_connected_graph(spec.n, spec.prob, spec.seed);
        case Family::random_tree: return random_tree_graph(spec.n, spec.seed);
        case Family::random_bipartite: return random_bipartite_graph(spec.a, spec.b, spec.prob, spec.seed);
        case Family::nanotorus: return nanotorus(spec.p, spec.q);
    }
    throw std::invalid_argument("unknown graph family tag");
}

}  // namespace wle
