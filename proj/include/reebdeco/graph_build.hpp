#pragma once

#include <vector>

#include "reebdeco/core.hpp"

namespace reebdeco {

struct PointCloud {
    std::vector<std::vector<double>> points;

    int size() const { return int(points.size()); }
    int dim() const { return points.empty() ? 0 : int(points.front().size()); }
    void validate() const;
};

SymMatrix pairwise_distances(const PointCloud& cloud);

// Union of the directed k-nearest-neighbor relations, with Euclidean node
// metric and positions attached; values stay unset until a field is applied.
// Distance ties break toward the smaller index. Throws DisconnectedError
// (with the component count) when the union graph is not connected.
FunctionGraph knn_graph(const PointCloud& cloud, int k);

// Edge whenever the pairwise distance is <= r.
FunctionGraph radius_graph(const PointCloud& cloud, double r);

std::vector<double> height_field(const PointCloud& cloud, int axis);

// p-eccentricity: x -> (sum_y d(x,y)^p)^(1/p).
std::vector<double> eccentricity_field(const SymMatrix& metric, double p);

// Undirected PageRank with uniform teleport; every edge acts as two directed
// arcs. Stops when the L1 change drops below tol; throws NonConvergenceError
// after max_iter sweeps.
std::vector<double> pagerank_field(const FunctionGraph& graph, double damping, double tol,
                                   int max_iter = 100000);

// Greedy farthest-point subsample of a metric; returns `count` node indices
// starting from node 0 (deterministic). Used to keep Vietoris-Rips inputs at
// desk scale.
std::vector<int> farthest_point_sample(const SymMatrix& metric, int count);

}  // namespace reebdeco
