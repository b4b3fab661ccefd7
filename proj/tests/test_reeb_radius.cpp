#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reebdeco/reeb_radius.hpp"

using namespace reebdeco;

namespace {

// a -- m -- b with g = [0, 4, 3]
FunctionGraph path_amb() {
    FunctionGraph g;
    g.n = 3;
    g.edges = {{0, 1}, {1, 2}};
    g.assign_scalar_values({0.0, 4.0, 3.0});
    return g;
}

// a - c - b and a - d - b with g = [0, 5, 0, 1] on (a, c, b, d)
FunctionGraph diamond() {
    FunctionGraph g;
    g.n = 4;
    g.edges = {{0, 1}, {1, 2}, {0, 3}, {2, 3}};
    g.assign_scalar_values({0.0, 5.0, 0.0, 1.0});
    return g;
}

}  // namespace

TEST_CASE("path fixture: directed radii and the asymmetry") {
    auto g = path_amb();
    auto from_a = reeb_radius_from(g, 0);
    CHECK(from_a.rho == std::vector<double>{0, 4, 4});
    auto from_b = reeb_radius_from(g, 2);
    CHECK(from_b.rho == std::vector<double>{3, 1, 0});
    // rho(a,b) = 4 but rho(b,a) = 3
    CHECK(from_a.rho[2] != from_b.rho[0]);
}

TEST_CASE("diamond fixture: the best path avoids the tall detour") {
    auto g = diamond();
    auto from_a = reeb_radius_from(g, 0);
    CHECK(from_a.rho[2] == 1.0);
    CHECK(oracle_reeb_radius(g, 0, 2) == 1.0);
    CHECK(oracle_reeb_distance(g, 0, 2) == 1.0);
}

TEST_CASE("matrix rows equal per-source runs") {
    auto g = path_amb();
    auto m = reeb_radius_matrix(g);
    CHECK(m[0] == std::vector<double>{0, 4, 4});
    CHECK(m[1] == std::vector<double>{4, 0, 1});
    CHECK(m[2] == std::vector<double>{3, 1, 0});
}

TEST_CASE("constant values give an all-zero matrix; singleton graph works") {
    FunctionGraph g;
    g.n = 4;
    g.edges = {{0, 1}, {1, 2}, {2, 3}};
    g.assign_scalar_values({2.5, 2.5, 2.5, 2.5});
    for (const auto& row : reeb_radius_matrix(g))
        for (double v : row) CHECK(v == 0.0);

    FunctionGraph single;
    single.n = 1;
    single.assign_scalar_values({7.0});
    CHECK(reeb_radius_matrix(single) == std::vector<std::vector<double>>{{0.0}});
}

TEST_CASE("oracle: empty path, single path, and the size guard") {
    auto g = path_amb();
    CHECK(oracle_reeb_radius(g, 1, 1) == 0.0);
    CHECK(oracle_reeb_radius(g, 0, 2) == 4.0);
    CHECK(oracle_reeb_distance(g, 0, 2) == 4.0);  // diam{0,4,3}

    SplitMix64 rng(1);
    auto big = testutil::random_connected_graph(rng, 13);
    testutil::assign_uniform_values(big, rng);
    CHECK_THROWS_AS(oracle_reeb_radius(big, 0, 1), SizeError);
    CHECK_THROWS_AS(oracle_reeb_distance(big, 0, 1), SizeError);
}

TEST_CASE("property: algorithm equals the path-enumeration oracle exactly") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + int(rng.next_below(9));
        auto g = testutil::random_connected_graph(rng, n);
        testutil::assign_uniform_values(g, rng, 0.0, 10.0);
        auto matrix = reeb_radius_matrix(g);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                CHECK(matrix[x][y] == oracle_reeb_radius(g, x, y));
    }
}

TEST_CASE("property: quasimetric axioms hold exactly on dyadic values") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + int(rng.next_below(9));
        auto g = testutil::random_connected_graph(rng, n);
        testutil::assign_dyadic_values(g, rng);
        auto m = reeb_radius_matrix(g);
        for (int x = 0; x < n; ++x) {
            CHECK(m[x][x] == 0.0);
            for (int y = 0; y < n; ++y) {
                CHECK(m[x][y] >= g.value_dist(x, y));  // lower bound
                for (int z = 0; z < n; ++z) CHECK(m[x][z] <= m[x][y] + m[y][z]);
            }
        }
    }
}

TEST_CASE("property: rho <= reeb distance <= 2 rho on small instances") {
    SplitMix64 rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng.next_below(7));
        auto g = testutil::random_connected_graph(rng, n);
        testutil::assign_dyadic_values(g, rng);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                double rho = oracle_reeb_radius(g, x, y);
                double del = oracle_reeb_distance(g, x, y);
                CHECK(rho <= del);
                CHECK(del <= 2 * rho);
            }
    }
}

TEST_CASE("determinism: repeated runs are bit-identical") {
    SplitMix64 rng(45);
    auto g = testutil::random_connected_graph(rng, 40, 0.1);
    testutil::assign_uniform_values(g, rng);
    auto a = reeb_radius_matrix(g);
    auto b = reeb_radius_matrix(g);
    CHECK(a == b);
    CHECK(reeb_radius_from(g, 17).rho == a[17]);
}

TEST_CASE("vector-valued codomain works through the same sweep") {
    FunctionGraph g;
    g.n = 3;
    g.edges = {{0, 1}, {1, 2}};
    g.value_dim = 2;
    g.values = {0, 0, 3, 4, 0, 1};  // distances from node 0: 5, 1
    auto field = reeb_radius_from(g, 0);
    CHECK(field.rho == std::vector<double>{0, 5, 5});
}
