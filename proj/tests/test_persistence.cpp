#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "reebdeco/reeb_radius.hpp"

using namespace reebdeco;

namespace {

const double kSqrt2 = std::sqrt(2.0);

SymMatrix unit_square_metric() {
    PointCloud c;
    c.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return pairwise_distances(c);
}

// 4-cycle graph on the square corners with f = y, anchored at the bottom-left.
ReebRadiusField square_rho_from_corner() {
    FunctionGraph g;
    g.n = 4;
    g.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    g.assign_scalar_values({0.0, 0.0, 1.0, 1.0});
    return reeb_radius_from(g, 0);
}

int count_dim(const FilteredComplex& fc, int d) {
    int c = 0;
    for (const auto& s : fc.simplices)
        if (s.dim() == d) ++c;
    return c;
}

}  // namespace

TEST_CASE("unit square filtration inventory") {
    auto fc = vr_filtration(unit_square_metric(), 2.0, 2);
    CHECK(count_dim(fc, 0) == 4);
    CHECK(count_dim(fc, 1) == 6);
    CHECK(count_dim(fc, 2) == 4);
    int at_one = 0, at_sqrt2 = 0;
    for (const auto& s : fc.simplices) {
        if (s.dim() != 1) continue;
        if (s.scale == 1.0) ++at_one;
        if (s.scale == kSqrt2) ++at_sqrt2;
    }
    CHECK(at_one == 4);
    CHECK(at_sqrt2 == 2);
    for (const auto& s : fc.simplices)
        if (s.dim() == 2) CHECK(s.scale == kSqrt2);
}

TEST_CASE("degenerate filtrations") {
    SymMatrix one(1);
    auto fc = vr_filtration(one, 1.0, 2);
    CHECK(fc.simplices.size() == 1);
    CHECK(fc.simplices[0].scale == 0.0);

    auto sparse = vr_filtration(unit_square_metric(), 0.5, 2);
    CHECK(sparse.simplices.size() == 4);  // vertices only
}

TEST_CASE("face-before-coface ordering in emitted complexes") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto cloud = testutil::random_cloud(rng, 7, 2);
        auto fc = vr_filtration(pairwise_distances(cloud), 1.5, 2);
        std::set<std::vector<int>> seen;
        for (const auto& s : fc.simplices) {
            for (int skip = 0; skip < int(s.vertices.size()) && s.dim() > 0; ++skip) {
                std::vector<int> face;
                for (int i = 0; i < int(s.vertices.size()); ++i)
                    if (i != skip) face.push_back(s.vertices[i]);
                CHECK(seen.count(face) == 1);
            }
            seen.insert(s.vertices);
        }
    }
}

TEST_CASE("capacity guard trips") {
    SplitMix64 rng(8);
    auto cloud = testutil::random_cloud(rng, 12, 2);
    CHECK_THROWS_AS(vr_filtration(pairwise_distances(cloud), 2.0, 3, 50), CapacityError);
}

TEST_CASE("unit square barcodes: H1 and H0 fixtures") {
    auto fc = vr_filtration(unit_square_metric(), 2.0, 2);
    auto h1 = reduce_and_extract(fc, 1);
    REQUIRE(h1.intervals.size() == 1);
    CHECK(h1.intervals[0].birth == 1.0);
    CHECK(h1.intervals[0].death == kSqrt2);
    CHECK_FALSE(h1.intervals[0].open);

    auto h0 = reduce_and_extract(fc, 0);
    REQUIRE(h0.intervals.size() == 4);
    int open_count = 0, finite_01 = 0;
    for (const auto& iv : h0.intervals) {
        if (iv.open)
            ++open_count;
        else if (iv.birth == 0.0 && iv.death == 1.0)
            ++finite_01;
    }
    CHECK(open_count == 1);
    CHECK(finite_01 == 3);
}

TEST_CASE("single point: one open H0 bar at 0") {
    SymMatrix one(1);
    auto bc = reduce_and_extract(vr_filtration(one, 1.0, 1), 0);
    REQUIRE(bc.intervals.size() == 1);
    CHECK(bc.intervals[0].birth == 0.0);
    CHECK(bc.intervals[0].open);
}

TEST_CASE("constrained square: slack c covers all radii, identical to plain VR") {
    auto metric = unit_square_metric();
    auto rho = square_rho_from_corner();
    auto constrained = constrained_vr_filtration(metric, rho, {1.0, 2.0}, 2.0, 2);
    auto plain = vr_filtration(metric, 2.0, 2);
    CHECK(constrained.simplices.size() == plain.simplices.size());
    CHECK(reduce_and_extract(constrained, 1).intervals ==
          reduce_and_extract(plain, 1).intervals);
}

TEST_CASE("constrained square: c = 0 delays the top corners, H1 bar unchanged") {
    auto metric = unit_square_metric();
    auto rho = square_rho_from_corner();
    auto fc = constrained_vr_filtration(metric, rho, {1.0, 0.0}, 2.0, 2);
    for (const auto& s : fc.simplices) {
        if (s.dim() != 0) continue;
        int v = s.vertices[0];
        CHECK(s.scale == (v >= 2 ? 1.0 : 0.0));  // corners 2,3 carry rho = 1
    }
    auto h1 = reduce_and_extract(fc, 1);
    REQUIRE(h1.intervals.size() == 1);
    CHECK(h1.intervals[0].birth == 1.0);
    CHECK(h1.intervals[0].death == kSqrt2);
}

TEST_CASE("constrained square: lambda 0 keeps only the anchor level set") {
    auto metric = unit_square_metric();
    auto rho = square_rho_from_corner();
    auto fc = constrained_vr_filtration(metric, rho, {0.0, 0.0}, 2.0, 2);
    std::set<int> present;
    for (const auto& s : fc.simplices)
        if (s.dim() == 0) present.insert(s.vertices[0]);
    CHECK(present == std::set<int>{0, 1});  // bottom edge: the rho = 0 component
}

TEST_CASE("property: barcode Betti profile matches GF(2) rank oracle") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + int(rng.next_below(6));
        auto cloud = testutil::random_cloud(rng, n, 2);
        auto metric = pairwise_distances(cloud);
        double r_max = metric.max_entry();
        auto fc = vr_filtration(metric, r_max, 2);
        for (int k : {0, 1}) {
            auto bc = reduce_and_extract(fc, k);
            std::set<double> scales;
            for (const auto& s : fc.simplices) scales.insert(s.scale);
            for (double t : scales)
                CHECK(testutil::bars_alive_at(bc, k, t) == testutil::betti_by_rank(fc, k, t));
        }
    }
}

TEST_CASE("property: total H0 bars equal the vertex count") {
    SplitMix64 rng(56);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + int(rng.next_below(7));
        auto metric = pairwise_distances(testutil::random_cloud(rng, n, 2));
        auto bc = reduce_and_extract(vr_filtration(metric, metric.max_entry(), 1), 0);
        CHECK(int(bc.intervals.size()) == n);
    }
}

TEST_CASE("bottleneck fixtures") {
    Barcode a, b, empty;
    a.intervals = {{1, 1.0, 3.0, false}};
    CHECK(bottleneck(a, a, 1) == 0.0);
    CHECK(bottleneck(a, empty, 1) == 1.0);  // diagonal at half persistence

    Barcode c, d;
    c.intervals = {{1, 0.0, 2.0, false}};
    d.intervals = {{1, 0.5, 2.0, false}};
    CHECK(bottleneck(c, d, 1) == 0.5);
}

TEST_CASE("bottleneck: open bars pair by birth or blow up") {
    Barcode a, b;
    a.intervals = {{0, 0.0, 5.0, true}, {0, 1.0, 2.0, false}};
    b.intervals = {{0, 0.25, 5.0, true}, {0, 1.0, 2.1, false}};
    CHECK(bottleneck(a, b, 0) == doctest::Approx(0.25));

    Barcode extra_open = b;
    extra_open.intervals.push_back({0, 0.0, 5.0, true});
    CHECK_THROWS_AS(bottleneck(a, extra_open, 0), InfiniteDistanceError);
}

TEST_CASE("property: bottleneck equals exhaustive matching on small barcodes") {
    SplitMix64 rng(57);
    for (int trial = 0; trial < 150; ++trial) {
        auto gen = [&](int max_bars) {
            std::vector<Interval> bars;
            int count = int(rng.next_below(max_bars + 1));
            for (int i = 0; i < count; ++i) {
                double birth = rng.next_range(0.0, 2.0);
                double pers = rng.next_range(0.0, 2.0);
                bool open = rng.next_double() < 0.15;
                bars.push_back({0, birth, open ? 4.0 : birth + pers, open});
            }
            return bars;
        };
        auto a = gen(5), b = gen(5);
        double exhaustive = testutil::exhaustive_bottleneck(a, b);
        if (std::isinf(exhaustive)) {
            CHECK_THROWS_AS(bottleneck_intervals(a, b), InfiniteDistanceError);
        } else {
            CHECK(bottleneck_intervals(a, b) == doctest::Approx(exhaustive).epsilon(1e-12));
        }
    }
}

TEST_CASE("property: bottleneck is a pseudometric on random barcode triples") {
    SplitMix64 rng(58);
    for (int trial = 0; trial < 60; ++trial) {
        auto gen = [&]() {
            std::vector<Interval> bars;
            int count = 1 + int(rng.next_below(4));
            for (int i = 0; i < count; ++i) {
                double birth = rng.next_range(0.0, 2.0);
                bars.push_back({0, birth, birth + rng.next_range(0.0, 2.0), false});
            }
            return bars;
        };
        auto a = gen(), b = gen(), c = gen();
        double ab = bottleneck_intervals(a, b);
        double ba = bottleneck_intervals(b, a);
        CHECK(ab == ba);  // symmetry exact
        double ac = bottleneck_intervals(a, c);
        double cb = bottleneck_intervals(c, b);
        CHECK(ab <= ac + cb + 1e-9);
    }
}

TEST_CASE("property: perturbation stability of the constrained barcode") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 5 + int(rng.next_below(5));
        auto g = testutil::random_connected_graph(rng, n, 0.4);
        testutil::assign_uniform_values(g, rng);
        testutil::assign_euclidean_metric(g, rng);
        double lambda = 0.5 + rng.next_double();
        double eta = 0.02 + 0.05 * rng.next_double();

        auto rho1 = reeb_radius_from(g, 0);

        // Perturb: metric entries by at most eta, values by a small delta.
        auto g2 = g;
        SymMatrix m2 = *g.node_metric;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                m2.set(i, j, std::max(0.0, m2.at(i, j) + rng.next_range(-eta, eta)));
        g2.node_metric = m2;
        for (double& v : g2.values) v += rng.next_range(-0.02, 0.02);
        auto rho2 = reeb_radius_from(g2, 0);

        double s = 0.0;
        for (int v = 0; v < n; ++v) s = std::max(s, std::abs(rho1.rho[v] - rho2.rho[v]));

        double r_max = std::max(g.node_metric->max_entry(), m2.max_entry()) +
                       std::max(*std::max_element(rho1.rho.begin(), rho1.rho.end()),
                                *std::max_element(rho2.rho.begin(), rho2.rho.end())) / lambda + 1.0;
        SliceSchedule sched{lambda, 0.0};
        auto b1 = reduce_and_extract(constrained_vr_filtration(*g.node_metric, rho1, sched, r_max, 2), 1);
        auto b2 = reduce_and_extract(constrained_vr_filtration(m2, rho2, sched, r_max, 2), 1);
        double db = bottleneck(b1, b2, 1);
        CHECK(db <= std::max(2 * eta, s / lambda) + 1e-9);
    }
}
