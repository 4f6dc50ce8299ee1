#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wle {

// Thrown by the graph6 and edge-list readers; carries the byte offset of the
// offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t byte_offset);
    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored as
// sorted (u,v) pairs with u < v, plus sorted neighbor lists for traversal.
class Graph {
public:
    // Deduplicates undirected pairs; rejects self-loops and out-of-range
    // endpoints with std::invalid_argument.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    Graph() = default;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adjacency_;
};

// All-pairs BFS hop distances of a connected graph.
class DistanceMatrix {
public:
    int order() const noexcept { return n_; }
    int at(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }
    // Transmission Tr(u): sum of distances from u to every other vertex.
    long long row_sum(int u) const;
    // Eccentricity of u: largest distance from u.
    int row_max(int u) const;

private:
    friend DistanceMatrix distance_matrix(const Graph&);
    int n_ = 0;
    std::vector<int> d_;
};

// Either a proper two-coloring (bipartite == true, side[v] in {0,1}) or an
// odd closed walk witnessing non-bipartiteness: consecutive vertices of
// odd_cycle are adjacent, as are its last and first.
struct Bipartition {
    bool bipartite = false;
    std::vector<int> side;
    std::vector<int> odd_cycle;
};

bool is_connected(const Graph& g);

// Rejects disconnected input, naming two unreachable vertices.
DistanceMatrix distance_matrix(const Graph& g);

Bipartition bipartition(const Graph& g);

// graph6: one graph per ASCII line, N(n) header then the upper triangle in
// column-major order, 6 bits per byte, offset 63, zero padding.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Edge-list text: first line "n m", then m lines "u v"; '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(const Graph& g, std::ostream& out);

// Loads every graph in a file: .g6 files hold one graph6 line per graph,
// anything else is a single edge-list graph.
std::vector<Graph> load_graph_file(const std::string& path);

}  // namespace wle
