#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "reebdeco/core.hpp"

namespace reebdeco {

// Relation between two node sets whose coordinate projections are surjective.
struct Correspondence {
    std::vector<std::pair<int, int>> pairs;
    void validate(int nx, int ny) const;
};

// Quantitative tameness fit: rho(x,y) <= L d(x,y) + 2 eps over all pairs.
struct ConnectivityConstants {
    double L = 0.0;
    double eps = 0.0;
};

// Minimal (r, s) for which `corr` is an (r, s)-correspondence between the two
// metric fields: r is half the worst metric distortion, s the worst value
// distance across matched pairs.
std::pair<double, double> check_rs_correspondence(const FunctionGraph& f1,
                                                  const FunctionGraph& f2,
                                                  const Correspondence& corr);

// Exact Gromov-Hausdorff distance between metric fields by branch-and-bound
// over correspondences (every minimal correspondence is a union of two
// assignment graphs, so searching phi: X->Y then psi over uncovered Y is
// exhaustive). Fields must have at most max_size nodes.
double brute_gh(const FunctionGraph& f1, const FunctionGraph& f2, int max_size = 6);

// Generic minimax correspondence search: minimizes, over correspondences R,
//   max( max_{p in R} unary(p), max_{p,q in R} binary(p, q) ).
// Both costs must be nonnegative; binary is evaluated with p != q (ordered
// once, callers symmetrize internally if needed).
double min_correspondence_cost(int nx, int ny,
                               const std::function<double(int, int)>& unary,
                               const std::function<double(int, int, int, int)>& binary);

// Minimal L such that rho <= L d + 2 eps holds on every ordered pair, for the
// given eps. Returns infinity when distinct nodes sit at metric distance 0
// with rho above the slack.
ConnectivityConstants fit_connectivity(const FunctionGraph& graph, double eps);
ConnectivityConstants fit_connectivity(const SymMatrix& metric,
                                       const std::vector<std::vector<double>>& rho, double eps);

struct FgwOptions {
    double alpha = 0.5;         // 0: pure feature cost, 1: pure metric distortion
    double ot_eps = 1e-2;       // entropic regularization
    int max_outer = 500;
    double objective_tol = 1e-7;
    int max_sinkhorn = 500;
    double marginal_tol = 1e-9;
};

struct FgwResult {
    double value = 0.0;
    bool converged = false;
    std::vector<double> coupling;  // n1 x n2 row-major
};

// Fused Gromov-Wasserstein between decorated Reeb graphs with uniform node
// measures: (1 - alpha) * <feature cost, T> + alpha * squared-loss metric
// distortion, minimized by alternating stabilized-Sinkhorn steps. The feature
// cost is the L2 distance between persistence-image decorations (alpha = 1
// skips features and needs no decorations). The returned value is the exact
// unregularized objective at the best feasible coupling found.
FgwResult fgw(const DecoratedReebGraph& a, const DecoratedReebGraph& b, const FgwOptions& options);

// Exact objective of a given coupling; used by the tiny-instance oracles.
double fgw_objective(const std::vector<double>& feature_cost, const SymMatrix& ca,
                     const SymMatrix& cb, const std::vector<double>& coupling, double alpha);

// Classical multidimensional scaling: double centering plus the top
// eigenvectors, coordinates scaled by sqrt(max(eigenvalue, 0)). Column signs
// are fixed so each embedding dimension's first nonzero coordinate is
// positive.
std::vector<std::vector<double>> mds_embed(const SymMatrix& dist, int dims);

}  // namespace reebdeco
