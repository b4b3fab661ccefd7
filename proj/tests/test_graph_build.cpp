#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace reebdeco;

namespace {

PointCloud collinear3() {
    PointCloud c;
    c.points = {{0.0}, {1.0}, {2.0}};
    return c;
}

PointCloud unit_square() {
    PointCloud c;
    c.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return c;
}

}  // namespace

TEST_CASE("knn: collinear points with k=1 give the path") {
    auto g = knn_graph(collinear3(), 1);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK(g.node_metric);
    CHECK(g.node_metric->at(0, 2) == 2.0);
}

TEST_CASE("knn: k = n-1 gives the complete graph") {
    SplitMix64 rng(5);
    auto cloud = testutil::random_cloud(rng, 6, 3);
    auto g = knn_graph(cloud, 5);
    CHECK(int(g.edges.size()) == 15);
}

TEST_CASE("knn: two far clusters with k=1 disconnect") {
    PointCloud c;
    c.points = {{0, 0}, {0.1, 0}, {100, 0}, {100.1, 0}};
    try {
        knn_graph(c, 1);
        FAIL("expected DisconnectedError");
    } catch (const DisconnectedError& e) {
        CHECK(e.components == 2);
    }
}

TEST_CASE("radius graph on the unit square") {
    CHECK(radius_graph(unit_square(), 1.0).edges.size() == 4);   // 4-cycle
    CHECK(radius_graph(unit_square(), 1.5).edges.size() == 6);   // K4
    CHECK_THROWS_AS(radius_graph(unit_square(), 0.5), DisconnectedError);
}

TEST_CASE("graph builders emit simple graphs covering every node") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        auto cloud = testutil::random_cloud(rng, 4 + int(rng.next_below(12)), 2);
        FunctionGraph g;
        try {
            g = trial % 2 ? knn_graph(cloud, 1 + int(rng.next_below(3)))
                          : radius_graph(cloud, 0.3 + rng.next_double());
        } catch (const DisconnectedError&) {
            continue;
        }
        g.validate();  // simplicity + connectivity
        std::vector<int> degree(g.n, 0);
        for (auto [a, b] : g.edges) {
            ++degree[a];
            ++degree[b];
        }
        for (int v = 0; v < g.n; ++v) CHECK(degree[v] >= 1);
    }
}

TEST_CASE("height field projects a coordinate and is not rotation invariant") {
    PointCloud c;
    c.points = {{0, 0, 1}, {0, 0, 5}};
    CHECK(height_field(c, 2) == std::vector<double>{1, 5});
    CHECK(height_field(c, 0) == std::vector<double>{0, 0});

    // Documented non-invariance: a rotation changes the output.
    PointCloud rotated;
    rotated.points = {{1, 0, 0}, {5, 0, 0}};
    CHECK(height_field(rotated, 2) != height_field(c, 2));
}

TEST_CASE("eccentricity on small fixtures") {
    PointCloud two;
    two.points = {{0.0}, {3.0}};
    auto m2 = pairwise_distances(two);
    CHECK(eccentricity_field(m2, 2.0) == std::vector<double>{3.0, 3.0});

    auto m3 = pairwise_distances(collinear3());
    auto e2 = eccentricity_field(m3, 2.0);
    CHECK(e2[0] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(e2[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(e2[2] == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));

    auto e1 = eccentricity_field(m3, 1.0);
    CHECK(e1[0] == doctest::Approx(3.0));
    CHECK(e1[1] == doctest::Approx(2.0));
    CHECK(e1[2] == doctest::Approx(3.0));
}

TEST_CASE("property: eccentricity is permutation-equivariant and isometry-invariant") {
    SplitMix64 rng(314);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + int(rng.next_below(10));
        auto cloud = testutil::random_cloud(rng, n, 2, 5.0);
        auto ecc = eccentricity_field(pairwise_distances(cloud), 2.0);

        // Rigid motion: rotate + translate, then shuffle.
        double angle = rng.next_range(0.0, 6.28);
        double tx = rng.next_range(-3.0, 3.0), ty = rng.next_range(-3.0, 3.0);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.next_below(i + 1)]);

        PointCloud moved;
        moved.points.resize(n);
        for (int i = 0; i < n; ++i) {
            double x = cloud.points[perm[i]][0], y = cloud.points[perm[i]][1];
            moved.points[i] = {std::cos(angle) * x - std::sin(angle) * y + tx,
                               std::sin(angle) * x + std::cos(angle) * y + ty};
        }
        auto ecc_moved = eccentricity_field(pairwise_distances(moved), 2.0);
        for (int i = 0; i < n; ++i) CHECK(ecc_moved[i] == doctest::Approx(ecc[perm[i]]).epsilon(1e-9));
    }
}

TEST_CASE("pagerank: symmetric fixtures") {
    FunctionGraph pair;
    pair.n = 2;
    pair.edges = {{0, 1}};
    auto pr = pagerank_field(pair, 0.7, 1e-13);
    CHECK(pr[0] == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(pr[1] == doctest::Approx(0.5).epsilon(1e-10));

    FunctionGraph cycle4;
    cycle4.n = 4;
    cycle4.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    for (double v : pagerank_field(cycle4, 0.85, 1e-13))
        CHECK(v == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("pagerank: 3-node star matches the 3x3 linear solve") {
    FunctionGraph star;
    star.n = 3;
    star.edges = {{0, 1}, {0, 2}};  // node 0 is the center
    double d = 0.85;
    auto pr = pagerank_field(star, d, 1e-14);

    // Solve pr = (1-d)/3 + d A pr for the star by hand: leaves are symmetric,
    // center = (1-d)/3 + 2 d leaf and leaf = (1-d)/3 + d center / 2, so
    // center = (1 + 2d) / (3 (1 + d)).
    double center = (1 + 2 * d) / (3 * (1 + d));
    double leaf = (1 - d) / 3.0 + d * center / 2.0;
    CHECK(pr[0] == doctest::Approx(center).epsilon(1e-10));
    CHECK(pr[1] == doctest::Approx(leaf).epsilon(1e-10));
    CHECK(pr[2] == doctest::Approx(leaf).epsilon(1e-10));
    CHECK(pr[0] > pr[1]);

    double sum = pr[0] + pr[1] + pr[2];
    CHECK(std::abs(sum - 1.0) < 10 * 1e-14);
}

TEST_CASE("property: pagerank is a near-fixed-point probability vector") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        auto g = testutil::random_connected_graph(rng, 3 + int(rng.next_below(10)));
        double tol = 1e-12;
        auto pr = pagerank_field(g, 0.85, tol);
        double sum = 0.0;
        for (double v : pr) {
            CHECK(v > 0.0);
            sum += v;
        }
        CHECK(std::abs(sum - 1.0) < 10 * tol);

        // One more sweep moves the vector by less than tol in L1.
        auto adj = g.adjacency();
        double residual = 0.0;
        for (int i = 0; i < g.n; ++i) {
            double inflow = 0.0;
            for (int j : adj[i]) inflow += pr[j] / double(adj[j].size());
            residual += std::abs((1 - 0.85) / g.n + 0.85 * inflow - pr[i]);
        }
        CHECK(residual < tol);
    }
}

TEST_CASE("farthest point sample spreads and keeps the seed node") {
    SplitMix64 rng(123);
    auto cloud = testutil::random_cloud(rng, 30, 2);
    auto metric = pairwise_distances(cloud);
    auto sample = farthest_point_sample(metric, 10);
    CHECK(sample.size() == 10);
    CHECK(std::find(sample.begin(), sample.end(), 0) != sample.end());
    CHECK(std::is_sorted(sample.begin(), sample.end()));
}
