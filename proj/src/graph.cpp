#include "wle/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace wle {

ParseError::ParseError(const std::string& what, std::size_t byte_offset)
    : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
      offset_(byte_offset) {}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(u >= 0 && u < n ? v : u) +
                                        " outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

long long DistanceMatrix::row_sum(int u) const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += at(u, v);
    return total;
}

int DistanceMatrix::row_max(int u) const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, at(u, v));
    return best;
}

namespace {

// Single-source BFS hop distances; unreachable vertices stay at -1.
std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                frontier.push(v);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix m;
    m.n_ = n;
    m.d_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        const auto dist = bfs_distances(g, u);
        for (int v = 0; v < n; ++v) {
            if (dist[static_cast<std::size_t>(v)] < 0)
                throw std::invalid_argument("graph is disconnected: no path between vertices " +
                                            std::to_string(u) + " and " + std::to_string(v));
            m.d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
                dist[static_cast<std::size_t>(v)];
        }
    }
    return m;
}

Bipartition bipartition(const Graph& g) {
    const int n = g.vertex_count();
    Bipartition result;
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), 0);

    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] >= 0) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::queue<int> frontier;
        frontier.push(root);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int v : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(v)] < 0) {
                    color[static_cast<std::size_t>(v)] = 1 - color[static_cast<std::size_t>(u)];
                    parent[static_cast<std::size_t>(v)] = u;
                    depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(u)] + 1;
                    frontier.push(v);
                } else if (color[static_cast<std::size_t>(v)] == color[static_cast<std::size_t>(u)]) {
                    // Same color on an edge: the two tree paths to the lowest
                    // common ancestor plus this edge close an odd walk.
                    std::vector<int> up_u, up_v;
                    int x = u, y = v;
                    while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
                        up_u.push_back(x);
                        x = parent[static_cast<std::size_t>(x)];
                    }
                    while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
                        up_v.push_back(y);
                        y = parent[static_cast<std::size_t>(y)];
                    }
                    while (x != y) {
                        up_u.push_back(x);
                        up_v.push_back(y);
                        x = parent[static_cast<std::size_t>(x)];
                        y = parent[static_cast<std::size_t>(y)];
                    }
                    result.bipartite = false;
                    result.odd_cycle = up_u;
                    result.odd_cycle.push_back(x);
                    result.odd_cycle.insert(result.odd_cycle.end(), up_v.rbegin(), up_v.rend());
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    result.side = std::move(color);
    return result;
}

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6Max = 126;

std::size_t g6_append_value(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Offset));
        return 1;
    }
    if (n <= 258047) {
        out.push_back(static_cast<char>(kG6Max));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Offset));
        return 4;
    }
    out.push_back(static_cast<char>(kG6Max));
    out.push_back(static_cast<char>(kG6Max));
    for (int shift = 30; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kG6Offset));
    return 8;
}

int g6_byte(std::string_view line, std::size_t pos) {
    if (pos >= line.size())
        throw ParseError("graph6 line truncated", pos);
    const int b = static_cast<unsigned char>(line[pos]);
    if (b < kG6Offset || b > kG6Max)
        throw ParseError("graph6 byte outside 63..126", pos);
    return b - kG6Offset;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw ParseError("empty graph6 line", 0);

    std::size_t pos = 0;
    long long n = 0;
    int first = g6_byte(line, pos);
    if (first < 63) {  // single-byte header, n in 0..62
        n = first;
        pos = 1;
    } else {  // 126 escape: three or (after a second escape) six more bytes
        int second = g6_byte(line, 1);
        int start = 2, words = 3;
        if (second == 63) {  // 126 126: six-byte form
            start = 2;
            words = 6;
        } else {
            start = 1;
            words = 3;
        }
        n = 0;
        for (int k = 0; k < words; ++k)
            n = (n << 6) | g6_byte(line, static_cast<std::size_t>(start + k));
        pos = static_cast<std::size_t>(start + words);
    }
    if (n < 1) throw ParseError("graph6 header encodes an empty vertex set", 0);
    if (n > 100000) throw ParseError("graph6 vertex count too large", 0);

    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(line.size()) - static_cast<long long>(pos) > bytes)
        throw ParseError("trailing data after graph6 bitstream", pos + static_cast<std::size_t>(bytes));

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int current = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int within = static_cast<int>(bit % 6);
            if (within == 0) current = g6_byte(line, pos + static_cast<std::size_t>(bit / 6));
            if (current & (1 << (5 - within))) edges.emplace_back(i, j);
        }
    }
    // Padding bits of the final byte must be zero in a canonical encoding.
    if (bits % 6 != 0) {
        const int pad = static_cast<int>(6 - bits % 6);
        const int last = g6_byte(line, pos + static_cast<std::size_t>(bytes - 1));
        if (last & ((1 << pad) - 1))
            throw ParseError("nonzero padding bits in graph6 bitstream",
                             pos + static_cast<std::size_t>(bytes - 1));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    g6_append_value(out, n);

    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    std::string body(static_cast<std::size_t>((bits + 5) / 6), '\0');
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j))
                body[static_cast<std::size_t>(bit / 6)] |= static_cast<char>(1 << (5 - bit % 6));
        }
    }
    for (char& c : body) c = static_cast<char>(c + kG6Offset);
    return out + body;
}

namespace {

struct Token {
    std::string text;
    std::size_t offset;
};

// Splits whitespace-separated tokens, dropping '#' comments to end of line.
std::vector<Token> tokenize_edge_list(std::string_view text) {
    std::vector<Token> tokens;
    bool in_comment = false;
    std::size_t start = std::string::npos;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char c = i < text.size() ? text[i] : '\n';
        if (c == '\n') in_comment = false;
        if (in_comment) continue;
        if (c == '#') {
            in_comment = true;
        }
        if (in_comment || std::isspace(static_cast<unsigned char>(c))) {
            if (start != std::string::npos) {
                tokens.push_back({std::string(text.substr(start, i - start)), start});
                start = std::string::npos;
            }
        } else if (start == std::string::npos) {
            start = i;
        }
    }
    return tokens;
}

long long parse_int_token(const Token& tok, const char* what) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument(tok.text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer ") + what + ", got '" + tok.text + "'",
                         tok.offset);
    }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    const auto tokens = tokenize_edge_list(text);
    if (tokens.size() < 2) throw ParseError("edge list header 'n m' missing", 0);
    const long long n = parse_int_token(tokens[0], "vertex count");
    const long long m = parse_int_token(tokens[1], "edge count");
    if (n < 1) throw ParseError("vertex count must be positive", tokens[0].offset);
    if (m < 0) throw ParseError("edge count must be nonnegative", tokens[1].offset);
    if (static_cast<long long>(tokens.size()) - 2 != 2 * m) {
        const std::size_t at = tokens.size() > 2 ? tokens.back().offset : tokens[1].offset;
        throw ParseError("expected " + std::to_string(2 * m) + " edge endpoints, found " +
                             std::to_string(tokens.size() - 2),
                         at);
    }
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(m));
    for (long long k = 0; k < m; ++k) {
        const long long u = parse_int_token(tokens[2 + 2 * static_cast<std::size_t>(k)], "vertex");
        const long long v = parse_int_token(tokens[3 + 2 * static_cast<std::size_t>(k)], "vertex");
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

Graph read_edge_list(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::vector<Graph> load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);

    const auto dot = path.find_last_of('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    std::vector<Graph> graphs;
    if (ext == ".g6" || ext == ".graph6") {
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line == "\r") continue;
            graphs.push_back(parse_graph6(line));
        }
        if (graphs.empty()) throw std::invalid_argument("no graph6 lines in " + path);
    } else {
        graphs.push_back(read_edge_list(in));
    }
    return graphs;
}

}  // namespace wle
