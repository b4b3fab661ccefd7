#include "reebdeco/reeb_radius.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "reebdeco/parallel.hpp"

namespace reebdeco {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> radius_from_impl(const FunctionGraph& graph,
                                     const std::vector<std::vector<int>>& adj, int source) {
    std::vector<double> rho(graph.n, kInf);
    rho[source] = 0.0;
    auto source_value = graph.value(source);

    // Min-heap on (rho, node); ties resolve to the smaller node index. Every
    // node is pushed at most once, at the moment its final value is assigned,
    // so no decrease-key is needed.
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
    queue.push({0.0, source});
    while (!queue.empty()) {
        auto [r, v] = queue.top();
        queue.pop();
        for (int w : adj[v]) {
            if (rho[w] == kInf) {  // infinity doubles as the visited sentinel
                rho[w] = std::max(r, graph.value_dist_to(source_value, w));
                queue.push({rho[w], w});
            }
        }
    }
    return rho;
}

}  // namespace

ReebRadiusField reeb_radius_from(const FunctionGraph& graph, int source) {
    if (source < 0 || source >= graph.n) throw SchemaError("source index out of range");
    if (!graph.has_values()) throw SchemaError("graph has no values");
    auto adj = graph.adjacency();
    return {source, radius_from_impl(graph, adj, source)};
}

std::vector<std::vector<double>> reeb_radius_matrix(const FunctionGraph& graph) {
    if (!graph.has_values()) throw SchemaError("graph has no values");
    auto adj = graph.adjacency();
    std::vector<std::vector<double>> rows(graph.n);
    parallel_for(std::size_t(graph.n), [&](std::size_t x) {
        rows[x] = radius_from_impl(graph, adj, int(x));
    });
    return rows;
}

namespace {

struct PathSearch {
    const FunctionGraph& graph;
    const std::vector<std::vector<int>>& adj;
    int target;
    std::vector<bool> visited;
    double best = kInf;
};

// DFS over simple paths carrying the running max of value distances to the
// source; the max only grows along a path, so branches at or above the best
// known value are pruned.
void radius_dfs(PathSearch& s, std::span<const double> source_value, int v, double cur_max) {
    if (cur_max >= s.best) return;
    if (v == s.target) {
        s.best = cur_max;
        return;
    }
    s.visited[v] = true;
    for (int w : s.adj[v]) {
        if (s.visited[w]) continue;
        double next = std::max(cur_max, s.graph.value_dist_to(source_value, w));
        radius_dfs(s, source_value, w, next);
    }
    s.visited[v] = false;
}

void diameter_dfs(PathSearch& s, std::vector<int>& path, int v, double cur_diam) {
    if (cur_diam >= s.best) return;
    if (v == s.target) {
        s.best = cur_diam;
        return;
    }
    s.visited[v] = true;
    path.push_back(v);
    for (int w : s.adj[v]) {
        if (s.visited[w]) continue;
        double next = cur_diam;
        for (int u : path) next = std::max(next, s.graph.value_dist(u, w));
        diameter_dfs(s, path, w, next);
    }
    path.pop_back();
    s.visited[v] = false;
}

void check_oracle_input(const FunctionGraph& graph, int x, int y) {
    if (graph.n > 12) throw SizeError("path-enumeration oracle limited to 12 nodes");
    if (x < 0 || y < 0 || x >= graph.n || y >= graph.n) throw SchemaError("node index out of range");
    if (!graph.has_values()) throw SchemaError("graph has no values");
}

}  // namespace

double oracle_reeb_radius(const FunctionGraph& graph, int x, int y) {
    check_oracle_input(graph, x, y);
    if (x == y) return 0.0;
    auto adj = graph.adjacency();
    PathSearch s{graph, adj, y, std::vector<bool>(graph.n, false), kInf};
    radius_dfs(s, graph.value(x), x, 0.0);
    return s.best;
}

double oracle_reeb_distance(const FunctionGraph& graph, int x, int y) {
    check_oracle_input(graph, x, y);
    if (x == y) return 0.0;
    auto adj = graph.adjacency();
    PathSearch s{graph, adj, y, std::vector<bool>(graph.n, false), kInf};
    std::vector<int> path;
    diameter_dfs(s, path, x, 0.0);
    return s.best;
}

}  // namespace reebdeco
