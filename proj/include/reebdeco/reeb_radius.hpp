#pragma once

#include <vector>

#include "reebdeco/core.hpp"

namespace reebdeco {

// Directed Reeb radius from one source: rho[v] is the smallest radius r such
// that some edge path from the source to v keeps every visited value within
// r of the source value.
struct ReebRadiusField {
    int source = 0;
    std::vector<double> rho;
};

// Single-source Reeb radius via the modified Dijkstra sweep: a node's radius
// is fixed the first time it is discovered as max(radius of the popped
// neighbor, value distance to the source), and each node enters and leaves
// the queue exactly once. Exact, not an approximation.
ReebRadiusField reeb_radius_from(const FunctionGraph& graph, int source);

// All-pairs matrix; row x equals reeb_radius_from(graph, x). Rows are
// computed independently (parallelized over sources).
std::vector<std::vector<double>> reeb_radius_matrix(const FunctionGraph& graph);

// Brute-force oracle: min over simple edge paths x -> y of the largest value
// distance from g(x) along the path. Restricting to simple paths is lossless:
// deleting a cycle from a path only removes terms from the max, so some
// optimal path is simple. Requires |V| <= 12.
double oracle_reeb_radius(const FunctionGraph& graph, int x, int y);

// Brute-force discrete Reeb distance: min over simple edge paths of the
// diameter of the value set visited (endpoints included). Same simple-path
// argument and size bound as above.
double oracle_reeb_distance(const FunctionGraph& graph, int x, int y);

}  // namespace reebdeco
