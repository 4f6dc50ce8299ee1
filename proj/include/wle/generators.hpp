#pragma once

#include <cstdint>
#include <string_view>

#include "wle/graph.hpp"

namespace wle {

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    random_connected,
    random_tree,
    random_bipartite,
    nanotorus,
};

const char* family_name(Family f);
Family family_from_name(std::string_view name);

struct FamilySpec {
    Family family = Family::path;
    int n = 0;           // path, cycle, complete, star, random_connected, random_tree
    int a = 0, b = 0;    // complete_bipartite, random_bipartite
    int p = 0, q = 0;    // nanotorus
    double prob = 0.5;   // random_connected, random_bipartite
    std::uint64_t seed = 0;
};

// Deterministic for a fixed spec (including seed). Parameter ranges:
//   path/complete/star/random_tree: n >= 1, cycle: n >= 3,
//   complete_bipartite/random_bipartite: a,b >= 1,
//   random_connected: n >= 1 and 0 < prob <= 1, nanotorus: p >= 2, q >= 1.
// Random families resample up to 10000 times waiting for connectivity.
Graph generate(const FamilySpec& spec);

// Achiral polyhex nanotorus T[p,q] in the brick-wall embedding: vertices
// (i,j) with i in 0..2p-1, j in 0..2q-1 at index j*2p+i, a row cycle
// (i,j)-((i+1) mod 2p, j), and one vertical edge (i,j)-(i,(j+1) mod 2q)
// exactly when i+j is even. 4pq vertices, 6pq edges, 3-regular, bipartite.
Graph nanotorus(int p, int q);

}  // namespace wle
