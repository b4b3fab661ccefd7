#pragma once

#include <cstdint>
#include <vector>

#include "reebdeco/core.hpp"
#include "reebdeco/reeb_radius.hpp"

namespace reebdeco {

constexpr std::size_t kDefaultSimplexCapacity = 5'000'000;

struct Simplex {
    std::vector<int> vertices;  // ascending
    double scale = 0.0;

    int dim() const { return int(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
};

// Simplices sorted by (scale, dimension, lexicographic vertices), so every
// face precedes its cofaces. Scales above r_max are not represented: the
// filtration is truncated there.
struct FilteredComplex {
    std::vector<Simplex> simplices;
    int vertex_count = 0;
    int max_dim = 0;
    double r_max = 0.0;
};

// One-parameter slice through the (scale, Reeb radius) plane: a vertex with
// radius rho participates from scale (rho - c) / lambda onward. lambda = 0
// degenerates to the fixed sublevel set {rho <= c}.
struct SliceSchedule {
    double lambda = 1.0;
    double c = 0.0;
};

// Plain Vietoris-Rips filtration: a simplex appears at the largest pairwise
// distance among its vertices; simplices whose scale would exceed r_max are
// omitted. Throws CapacityError beyond `capacity` simplices.
FilteredComplex vr_filtration(const SymMatrix& metric, double r_max, int max_dim,
                              std::size_t capacity = kDefaultSimplexCapacity);

// Vietoris-Rips constrained by a Reeb-radius sublevel schedule: vertex y
// appears at max(0, (rho(y) - c) / lambda) (never, if lambda = 0 and
// rho(y) > c); a simplex appears at the max of its vertices' appearances and
// its diameter.
FilteredComplex constrained_vr_filtration(const SymMatrix& metric, const ReebRadiusField& rho,
                                          const SliceSchedule& schedule, double r_max, int max_dim,
                                          std::size_t capacity = kDefaultSimplexCapacity);

// Degree-k persistent homology over the two-element field via column
// reduction with the clearing optimization. Zero-length bars are dropped;
// classes alive at r_max come back open with death = r_max.
Barcode reduce_and_extract(const FilteredComplex& complex, int k);

// Exact bottleneck distance between the dimension-k parts of two barcodes:
// binary search over candidate costs with bipartite matching feasibility
// tests. Open bars match only open bars (optimally, in sorted birth order);
// throws InfiniteDistanceError when the open-bar counts differ.
double bottleneck(const Barcode& a, const Barcode& b, int k);

double bottleneck_intervals(const std::vector<Interval>& a, const std::vector<Interval>& b);

}  // namespace reebdeco
