#pragma once

// Shared test utilities: seeded random instances and the independent oracles
// the library is checked against. Everything here recomputes results from
// first principles (flood fill, GF(2) rank, exhaustive matching) and must not
// call into the code paths under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "reebdeco/core.hpp"
#include "reebdeco/graph_build.hpp"
#include "reebdeco/persistence.hpp"
#include "reebdeco/rng.hpp"

namespace testutil {

using reebdeco::Barcode;
using reebdeco::FilteredComplex;
using reebdeco::FunctionGraph;
using reebdeco::Interval;
using reebdeco::PointCloud;
using reebdeco::SplitMix64;
using reebdeco::SymMatrix;

// Random connected simple graph: a random attachment tree plus extra edges.
inline FunctionGraph random_connected_graph(SplitMix64& rng, int n, double extra_edge_prob = 0.3) {
    FunctionGraph g;
    g.n = n;
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int parent = int(rng.next_below(v));
        edges.insert({parent, v});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_double() < extra_edge_prob) edges.insert({i, j});
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

// Scalar values on a dyadic grid: differences and sums of such values are
// exact in binary floating point, which the exact-equality properties rely on.
inline void assign_dyadic_values(FunctionGraph& g, SplitMix64& rng, int grid = 64) {
    std::vector<double> vals(g.n);
    for (double& v : vals) v = double(rng.next_below(grid)) / 16.0;
    g.assign_scalar_values(vals);
}

inline void assign_uniform_values(FunctionGraph& g, SplitMix64& rng, double lo = 0.0,
                                  double hi = 1.0) {
    std::vector<double> vals(g.n);
    for (double& v : vals) v = rng.next_range(lo, hi);
    g.assign_scalar_values(vals);
}

inline PointCloud random_cloud(SplitMix64& rng, int n, int dim = 2, double span = 1.0) {
    PointCloud c;
    for (int i = 0; i < n; ++i) {
        std::vector<double> p(dim);
        for (double& x : p) x = rng.next_range(0.0, span);
        c.points.push_back(p);
    }
    return c;
}

// Attach a Euclidean node metric from random planar positions.
inline void assign_euclidean_metric(FunctionGraph& g, SplitMix64& rng, double span = 1.0) {
    PointCloud c = random_cloud(rng, g.n, 2, span);
    g.node_metric = reebdeco::pairwise_distances(c);
    g.positions = c.points;
}

// Level-set components by flood fill on the subgraph of exactly-equal values;
// classes labeled in order of their minimal member, matching the quotient's
// class ordering.
inline std::vector<int> flood_fill_partition(const FunctionGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> label(g.n, -1);
    int next = 0;
    for (int start = 0; start < g.n; ++start) {
        if (label[start] >= 0) continue;
        std::vector<int> stack{start};
        label[start] = next;
        auto start_val = g.value(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (label[w] >= 0) continue;
                if (!std::equal(start_val.begin(), start_val.end(), g.value(w).begin())) continue;
                label[w] = next;
                stack.push_back(w);
            }
        }
        ++next;
    }
    return label;
}

// GF(2) rank by Gaussian elimination on dense 0/1 rows.
inline int gf2_rank(std::vector<std::vector<int>> rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < int(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < int(rows.size()); ++r)
            if (rows[r][c]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < int(rows.size()); ++r)
            if (r != rank && rows[r][c])
                for (int cc = 0; cc < cols; ++cc) rows[r][cc] ^= rows[rank][cc];
        ++rank;
    }
    return rank;
}

// Betti number of the subcomplex at scale t by boundary-matrix ranks:
// beta_k = #k-simplices - rank d_k - rank d_{k+1}.
inline int betti_by_rank(const FilteredComplex& fc, int k, double t) {
    std::map<std::vector<int>, int> index;  // within-dimension index of present simplices
    std::vector<int> count(fc.max_dim + 2, 0);
    for (const auto& s : fc.simplices) {
        if (s.scale > t) continue;
        index[s.vertices] = count[s.dim()]++;
    }
    auto boundary_rank = [&](int d) {
        if (d <= 0 || count[d] == 0 || count[d - 1] == 0) return 0;
        std::vector<std::vector<int>> rows;
        for (const auto& s : fc.simplices) {
            if (s.scale > t || s.dim() != d) continue;
            std::vector<int> row(count[d - 1], 0);
            for (int skip = 0; skip < int(s.vertices.size()); ++skip) {
                std::vector<int> face;
                for (int i = 0; i < int(s.vertices.size()); ++i)
                    if (i != skip) face.push_back(s.vertices[i]);
                row[index.at(face)] = 1;
            }
            rows.push_back(std::move(row));
        }
        return gf2_rank(std::move(rows), count[d - 1]);
    };
    if (count[k] == 0) return 0;
    return count[k] - boundary_rank(k) - (k + 1 <= fc.max_dim ? boundary_rank(k + 1) : 0);
}

// Bars alive at t, counting half-open [birth, death) plus open bars.
inline int bars_alive_at(const Barcode& bc, int k, double t) {
    int alive = 0;
    for (const auto& iv : bc.intervals)
        if (iv.dim == k && iv.birth <= t && (iv.open || iv.death > t)) ++alive;
    return alive;
}

// Exhaustive bottleneck matching for small barcodes: every injection of a
// subset of a into b, leftovers to the diagonal. Open bars pair exclusively
// with open bars.
inline double exhaustive_bottleneck(const std::vector<Interval>& a_all,
                                    const std::vector<Interval>& b_all) {
    std::vector<Interval> a, b, ao, bo;
    for (const auto& iv : a_all) (iv.open ? ao : a).push_back(iv);
    for (const auto& iv : b_all) (iv.open ? bo : b).push_back(iv);
    if (ao.size() != bo.size()) return std::numeric_limits<double>::infinity();

    double open_cost = std::numeric_limits<double>::infinity();
    std::vector<int> perm(bo.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
    if (perm.empty()) open_cost = 0.0;
    do {
        double cost = 0.0;
        for (std::size_t i = 0; i < ao.size(); ++i)
            cost = std::max(cost, std::abs(ao[i].birth - bo[perm[i]].birth));
        open_cost = std::min(open_cost, cost);
        if (perm.empty()) break;
    } while (std::next_permutation(perm.begin(), perm.end()));

    double best = std::numeric_limits<double>::infinity();
    std::vector<bool> used(b.size(), false);
    auto cost_pair = [](const Interval& x, const Interval& y) {
        return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death));
    };
    std::function<void(std::size_t, double)> recurse = [&](std::size_t i, double cur) {
        if (cur >= best) return;
        if (i == a.size()) {
            double total = cur;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (!used[j]) total = std::max(total, b[j].persistence() / 2.0);
            best = std::min(best, total);
            return;
        }
        recurse(i + 1, std::max(cur, a[i].persistence() / 2.0));  // diagonal
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            used[j] = true;
            recurse(i + 1, std::max(cur, cost_pair(a[i], b[j])));
            used[j] = false;
        }
    };
    recurse(0, 0.0);
    return std::max(open_cost, best);
}

}  // namespace testutil
