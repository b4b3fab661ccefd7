#pragma once

#include <optional>

#include "reebdeco/core.hpp"

namespace reebdeco {

struct QuotientSpec {
    double epsilon = 0.0;
    std::optional<double> round_step;  // snap value coordinates to multiples of theta first
};

// Snaps every value coordinate to the nearest multiple of theta. Per-node
// perturbation is at most (sqrt(m)/2) * theta in the Euclidean norm.
FunctionGraph round_values(const FunctionGraph& graph, double theta);

// epsilon-smoothed Reeb quotient. Nodes are identified when their values are
// exactly equal and the Reeb radius between them is <= epsilon in both
// directions; the union-find closure of that relation defines the classes.
// (On a fixed level set the Reeb radius is symmetric and the relation is
// transitive, since concatenating paths based at equal values takes a max,
// so the closure adds nothing; the closure keeps the construction
// well-defined regardless.)
//
// Representatives are the minimal node index per class; the quotient metric
// is d([v],[w]) = 2 * max(rho(v,w), rho(w,v)) evaluated at representatives.
// Induced edges are deduplicated and self-loops dropped. epsilon = 0 yields
// the Reeb graph: classes are the connected components of level sets.
DecoratedReebGraph smooth_quotient(const FunctionGraph& graph, const QuotientSpec& spec);

// As above but reuses a precomputed Reeb radius matrix of `graph`
// (post-rounding values must already be applied in that case).
DecoratedReebGraph smooth_quotient_with_matrix(const FunctionGraph& graph, double epsilon,
                                               const std::vector<std::vector<double>>& rho);

}  // namespace reebdeco
