#pragma once

#include <optional>
#include <vector>

#include "reebdeco/core.hpp"
#include "reebdeco/persistence.hpp"
#include "reebdeco/reeb_radius.hpp"

namespace reebdeco {

// The raw decoration of a class: the whole node set filtered by Reeb radius
// from the class representative.
struct FiltrationDecoration {
    int anchor_class = 0;
    std::vector<double> rho_values;
};

FiltrationDecoration filtration_decoration(const FunctionGraph& graph,
                                           const DecoratedReebGraph& drg, int cls);

// Degree-k barcode of the constrained Vietoris-Rips filtration anchored at
// the class representative. `sample` optionally restricts the complex to a
// subset of node indices (ascending); empty means all nodes.
Barcode barcode_decoration(const FunctionGraph& graph, const DecoratedReebGraph& drg, int cls,
                           const SliceSchedule& schedule, int k, double r_max,
                           const std::vector<int>& sample = {},
                           std::size_t capacity = kDefaultSimplexCapacity);

struct ImageSpec {
    int rows = 25;
    int cols = 25;
    double sigma = 0.0;  // 0: (persistence range width) / 20
    std::optional<std::pair<double, double>> birth_range;  // defaults fit the dataset
    std::optional<std::pair<double, double>> pers_range;
    double pers_cap = 0.0;  // weight saturation; 0: max persistence in the dataset
};

struct DecorateOptions {
    SliceSchedule schedule;
    int homology_dim = 1;
    double r_max = 0.0;  // 0: node-metric diameter
    std::vector<int> sample;
    std::size_t capacity = kDefaultSimplexCapacity;
    std::optional<ImageSpec> image;  // when set, barcodes are vectorized
};

// Fills a decoration for every class, in class order (parallelized, output
// order fixed). A class whose complex overruns the capacity keeps an absent
// decoration; the report lists such classes.
struct DecorateReport {
    std::vector<int> capacity_skipped;
    double r_max_used = 0.0;
    double pers_cap_used = 0.0;
};

DecorateReport decorate_all(const FunctionGraph& graph, DecoratedReebGraph& drg,
                            const DecorateOptions& options);

// Weighted-Gaussian vectorization of a barcode in birth-persistence
// coordinates. Open bars are clipped to r_max_clip first; the weight ramp is
// w(pers) = min(pers / pers_cap, 1); per-pixel mass is the exact integral of
// the Gaussian over the pixel rectangle.
PersistenceImage persistence_image(const Barcode& barcode, int rows, int cols, double sigma,
                                   std::pair<double, double> birth_range,
                                   std::pair<double, double> pers_range, double pers_cap,
                                   double r_max_clip);

}  // namespace reebdeco
