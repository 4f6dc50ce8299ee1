#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "test_util.hpp"
#include "wle/generators.hpp"
#include "wle/rng.hpp"
#include "wle/spectra.hpp"

using namespace wle;
using testutil::near;

TEST_CASE("matrix constructors") {
    const SymMatrix a = adjacency_matrix(testutil::k2());
    CHECK(a.at(0, 1) == 1.0);
    CHECK(a.at(0, 0) == 0.0);

    const SymMatrix ap3 = adjacency_matrix(testutil::p3());
    CHECK(ap3.at(0, 1) == 1.0);
    CHECK(ap3.at(1, 2) == 1.0);
    CHECK(ap3.at(0, 2) == 0.0);

    const SymMatrix zero = adjacency_matrix(testutil::edgeless(3));
    CHECK(zero.frobenius_norm() == 0.0);

    WeightVector tr{WeightKind::tr, {3.0, 2.0, 3.0}};
    const SymMatrix l = weighted_laplacian(testutil::p3(), tr);
    CHECK(l.at(0, 0) == 3.0);
    CHECK(l.at(1, 1) == 2.0);
    CHECK(l.at(0, 1) == -1.0);
    CHECK(l.at(0, 2) == 0.0);

    WeightVector deg2{WeightKind::deg2, {1.0, 4.0, 1.0}};
    const SymMatrix l2 = weighted_laplacian(testutil::p3(), deg2);
    CHECK(l2.at(1, 1) == 4.0);

    WeightVector short_w{WeightKind::deg, {1.0}};
    CHECK_THROWS_AS(weighted_laplacian(testutil::p3(), short_w), std::invalid_argument);

    const SymMatrix q = signless_weighted_laplacian(testutil::k2(), std::vector<double>{1.0, 1.0});
    CHECK(q.at(0, 0) == 1.0);
    CHECK(q.at(0, 1) == 1.0);

    const SymMatrix d = signless_weighted_laplacian(testutil::edgeless(2), std::vector<double>{5.0, 7.0});
    CHECK(d.at(0, 0) == 5.0);
    CHECK(d.at(1, 1) == 7.0);
    CHECK(d.at(0, 1) == 0.0);
}

TEST_CASE("from_rows rejects asymmetric input") {
    CHECK_THROWS_AS(SymMatrix::from_rows({{0.0, 1.0}, {2.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(SymMatrix::from_rows({{0.0, 1.0}, {1.0}}), std::invalid_argument);
    CHECK_NOTHROW(SymMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
}

TEST_CASE("eigenvalues of tiny matrices match closed forms") {
    const Spectrum k2 = symmetric_eigenvalues(adjacency_matrix(testutil::k2()));
    REQUIRE(k2.values.size() == 2);
    CHECK(near(k2.values[0], 1.0, 1e-9));
    CHECK(near(k2.values[1], -1.0, 1e-9));

    const Spectrum p3 = symmetric_eigenvalues(adjacency_matrix(testutil::p3()));
    REQUIRE(p3.values.size() == 3);
    CHECK(near(p3.values[0], std::sqrt(2.0), 1e-9));
    CHECK(near(p3.values[1], 0.0, 1e-9));
    CHECK(near(p3.values[2], -std::sqrt(2.0), 1e-9));

    WeightVector tr{WeightKind::tr, {3.0, 2.0, 3.0}};
    const Spectrum ltr = symmetric_eigenvalues(weighted_laplacian(testutil::p3(), tr));
    CHECK(near(ltr.values[0], 4.0, 1e-9));
    CHECK(near(ltr.values[1], 3.0, 1e-9));
    CHECK(near(ltr.values[2], 1.0, 1e-9));

    const Spectrum one = symmetric_eigenvalues(SymMatrix::from_rows({{7.5}}));
    CHECK(one.values == std::vector<double>{7.5});
}

TEST_CASE("random small matrices agree with the characteristic-polynomial oracle") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.next_in(1, 3));
        std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const double v = rng.next_in(-8, 8);
                rows[i][j] = rows[j][i] = v;
            }
        const Spectrum got = symmetric_eigenvalues(SymMatrix::from_rows(rows));
        const auto want = oracle::symmetric_eigenvalues_small(rows);
        REQUIRE(got.values.size() == want.size());
        for (std::size_t k = 0; k < want.size(); ++k) CHECK(near(got.values[k], want[k], 1e-9));
    }
}

TEST_CASE("spectrum sums match trace and Frobenius norm") {
    SplitMix64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        FamilySpec spec;
        spec.family = Family::random_connected;
        spec.n = static_cast<int>(rng.next_in(2, 14));
        spec.prob = 0.5;
        spec.seed = rng.next();
        const Graph g = generate(spec);

        const SymMatrix a = adjacency_matrix(g);
        const Spectrum sa = symmetric_eigenvalues(a);
        CHECK(near(sa.sum(), a.trace(), 1e-9 * (1.0 + std::abs(a.trace()))));
        const double fro2 = a.frobenius_norm() * a.frobenius_norm();
        CHECK(near(sa.sum_of_squares(), fro2, 1e-8 * (1.0 + fro2)));
        CHECK(sa.max_residual <= 1e-8);

        const WeightVector w = weight_vector(g, WeightKind::deg);
        const SymMatrix l = weighted_laplacian(g, w);
        const Spectrum sl = symmetric_eigenvalues(l);
        // eigenvalue sum is n * mean weight
        const double weight_sum = w.mean() * g.vertex_count();
        CHECK(near(sl.sum(), weight_sum, 1e-9 * (1.0 + std::abs(weight_sum))));
        // ordinary Laplacian: smallest eigenvalue is 0 on connected graphs
        CHECK(near(sl.values.back(), 0.0, 1e-9));
    }
}

TEST_CASE("eigenvalues come back sorted descending") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.next_in(1, 10));
        SymMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.set(i, j, rng.next_double() * 4.0 - 2.0);
        const Spectrum s = symmetric_eigenvalues(m);
        for (std::size_t k = 1; k < s.values.size(); ++k) CHECK(s.values[k - 1] >= s.values[k]);
    }
}
