#include "reebdeco/graph_build.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace reebdeco {

void PointCloud::validate() const {
    if (points.empty()) throw SchemaError("point cloud is empty");
    std::size_t d = points.front().size();
    if (d == 0) throw SchemaError("zero-dimensional points");
    for (const auto& p : points) {
        if (p.size() != d) throw SchemaError("inconsistent point dimensions");
        for (double x : p)
            if (!std::isfinite(x)) throw SchemaError("non-finite coordinate");
    }
}

SymMatrix pairwise_distances(const PointCloud& cloud) {
    int n = cloud.size();
    SymMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m.set(i, j, euclidean(cloud.points[i], cloud.points[j]));
    return m;
}

namespace {

FunctionGraph finish_cloud_graph(const PointCloud& cloud, SymMatrix metric,
                                 std::set<std::pair<int, int>> edge_set) {
    FunctionGraph g;
    g.n = cloud.size();
    g.edges.assign(edge_set.begin(), edge_set.end());
    g.node_metric = std::move(metric);
    g.positions = cloud.points;
    int comps = component_count(g.n, g.edges);
    if (comps != 1)
        throw DisconnectedError("cloud graph has " + std::to_string(comps) + " components", comps);
    return g;
}

}  // namespace

FunctionGraph knn_graph(const PointCloud& cloud, int k) {
    cloud.validate();
    int n = cloud.size();
    if (k < 1 || k >= n) throw SchemaError("knn requires 1 <= k < |cloud|");
    SymMatrix metric = pairwise_distances(cloud);

    std::set<std::pair<int, int>> edge_set;
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            double da = metric.at(i, a), db = metric.at(i, b);
            if (da != db) return da < db;
            return a < b;
        });
        // order[0] == i (distance 0, smallest tie index); neighbors follow.
        int taken = 0;
        for (int pos = 0; pos < n && taken < k; ++pos) {
            int j = order[pos];
            if (j == i) continue;
            edge_set.insert(std::minmax(i, j));
            ++taken;
        }
    }
    return finish_cloud_graph(cloud, std::move(metric), std::move(edge_set));
}

FunctionGraph radius_graph(const PointCloud& cloud, double r) {
    cloud.validate();
    if (!(r > 0)) throw SchemaError("radius must be positive");
    int n = cloud.size();
    SymMatrix metric = pairwise_distances(cloud);
    std::set<std::pair<int, int>> edge_set;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (metric.at(i, j) <= r) edge_set.insert({i, j});
    return finish_cloud_graph(cloud, std::move(metric), std::move(edge_set));
}

std::vector<double> height_field(const PointCloud& cloud, int axis) {
    cloud.validate();
    if (axis < 0 || axis >= cloud.dim()) throw SchemaError("height axis out of range");
    std::vector<double> out(cloud.size());
    for (int i = 0; i < cloud.size(); ++i) out[i] = cloud.points[i][axis];
    return out;
}

std::vector<double> eccentricity_field(const SymMatrix& metric, double p) {
    if (!(p > 0)) throw SchemaError("eccentricity exponent must be positive");
    int n = metric.size();
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += std::pow(metric.at(i, j), p);
        out[i] = std::pow(acc, 1.0 / p);
    }
    return out;
}

std::vector<double> pagerank_field(const FunctionGraph& graph, double damping, double tol,
                                   int max_iter) {
    if (!(damping > 0 && damping < 1)) throw SchemaError("damping must be in (0,1)");
    if (!(tol > 0)) throw SchemaError("tolerance must be positive");
    int n = graph.n;
    if (n == 1) return {1.0};
    auto adj = graph.adjacency();
    std::vector<double> pr(n, 1.0 / n), next(n);
    double teleport = (1.0 - damping) / n;
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int i = 0; i < n; ++i) {
            double inflow = 0.0;
            for (int j : adj[i]) inflow += pr[j] / double(adj[j].size());
            next[i] = teleport + damping * inflow;
        }
        double delta = 0.0;
        for (int i = 0; i < n; ++i) delta += std::abs(next[i] - pr[i]);
        pr.swap(next);
        if (delta < tol) return pr;
    }
    throw NonConvergenceError("pagerank did not converge within iteration cap");
}

std::vector<int> farthest_point_sample(const SymMatrix& metric, int count) {
    int n = metric.size();
    count = std::min(count, n);
    std::vector<int> chosen;
    chosen.reserve(count);
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    int cur = 0;
    for (int step = 0; step < count; ++step) {
        chosen.push_back(cur);
        int best = -1;
        double best_d = -1.0;
        for (int v = 0; v < n; ++v) {
            dist[v] = std::min(dist[v], metric.at(cur, v));
            if (dist[v] > best_d) {
                best_d = dist[v];
                best = v;
            }
        }
        cur = best;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace reebdeco
