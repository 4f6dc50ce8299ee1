#include "doctest.h"
#include "test_util.hpp"
#include "wle/generators.hpp"
#include "wle/weights.hpp"

using namespace wle;

namespace {

FamilySpec spec_of(Family f) {
    FamilySpec s;
    s.family = f;
    return s;
}

}  // namespace

TEST_CASE("deterministic families") {
    FamilySpec cycle4 = spec_of(Family::cycle);
    cycle4.n = 4;
    const Graph c4 = generate(cycle4);
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    FamilySpec star4 = spec_of(Family::star);
    star4.n = 4;
    const Graph s4 = generate(star4);
    CHECK(s4.degree(0) == 3);
    for (int v = 1; v < 4; ++v) CHECK(s4.degree(v) == 1);

    FamilySpec kab = spec_of(Family::complete_bipartite);
    kab.a = 2;
    kab.b = 3;
    const Graph g = generate(kab);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(bipartition(g).bipartite);

    FamilySpec p1 = spec_of(Family::path);
    p1.n = 1;
    CHECK(generate(p1).edge_count() == 0);
}

TEST_CASE("parameter validation") {
    FamilySpec bad = spec_of(Family::cycle);
    bad.n = 2;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);

    bad = spec_of(Family::random_connected);
    bad.n = 5;
    bad.prob = 0.0;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);

    bad = spec_of(Family::complete_bipartite);
    bad.a = 0;
    bad.b = 2;
    CHECK_THROWS_AS(generate(bad), std::invalid_argument);
}

TEST_CASE("random_tree is a deterministic tree") {
    FamilySpec tree = spec_of(Family::random_tree);
    tree.n = 8;
    tree.seed = 42;
    const Graph t1 = generate(tree);
    const Graph t2 = generate(tree);
    CHECK(t1 == t2);
    CHECK(t1.vertex_count() == 8);
    CHECK(t1.edge_count() == 7);
    CHECK(is_connected(t1));

    for (int n = 1; n <= 12; ++n) {
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            tree.n = n;
            tree.seed = seed;
            const Graph t = generate(tree);
            CHECK(t.edge_count() == n - 1);
            CHECK(is_connected(t));
            CHECK(bipartition(t).bipartite);
        }
    }
}

TEST_CASE("random_connected is connected and seed-stable") {
    FamilySpec rc = spec_of(Family::random_connected);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        rc.n = 9;
        rc.prob = 0.3;
        rc.seed = seed;
        const Graph g = generate(rc);
        CHECK(is_connected(g));
        CHECK(generate(rc) == g);
    }
}

TEST_CASE("random_bipartite is connected and two-colorable") {
    FamilySpec rb = spec_of(Family::random_bipartite);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        rb.a = 4;
        rb.b = 3;
        rb.prob = 0.5;
        rb.seed = seed;
        const Graph g = generate(rb);
        CHECK(is_connected(g));
        CHECK(bipartition(g).bipartite);
        CHECK(generate(rb) == g);
    }
}

TEST_CASE("nanotorus sizes and degrees") {
    const Graph t21 = nanotorus(2, 1);
    CHECK(t21.vertex_count() == 8);
    CHECK(t21.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(t21.degree(v) == 3);
    CHECK(is_connected(t21));

    const Graph t32 = nanotorus(3, 2);
    CHECK(t32.vertex_count() == 24);
    CHECK(t32.edge_count() == 36);
    CHECK(bipartition(t32).bipartite);

    CHECK_THROWS_AS(nanotorus(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(nanotorus(2, 0), std::invalid_argument);
}

TEST_CASE("nanotorus regularity consequences") {
    // vertex-transitivity is not computed; its measurable consequences are.
    for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 2}}) {
        const Graph t = nanotorus(p, q);
        CHECK(t.vertex_count() == 4 * p * q);
        CHECK(t.edge_count() == 6 * p * q);
        CHECK(is_connected(t));
        CHECK(bipartition(t).bipartite);
        for (int v = 0; v < t.vertex_count(); ++v) CHECK(t.degree(v) == 3);
        CHECK(is_regular(weight_vector(t, WeightKind::tr)));
        CHECK(is_regular(weight_vector(t, WeightKind::two_degree)));
        CHECK(is_regular(weight_vector(t, WeightKind::ecc)));  // self-centred
    }
}
