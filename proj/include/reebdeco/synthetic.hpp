#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reebdeco/graph_build.hpp"

namespace reebdeco {

enum class Shape {
    torus_wedge_circle,  // flat torus (radii 2 / 0.7) wedged with a standing circle (radius 3)
    sphere,              // radius 2
    torus,               // radii 2 / 0.7, axis along z
    cycle,               // unit circle, standing in the x-z plane
    four_class_set,      // scale-matched cycle / sphere / torus / wedge, several samples each
};

Shape shape_from_string(const std::string& name);
std::string shape_to_string(Shape shape);

struct SyntheticSet {
    std::vector<PointCloud> clouds;
    std::vector<int> labels;  // class per cloud; all zero except four_class_set
};

// Deterministic given the seed: all randomness flows through SplitMix64
// streams derived from it. `noise` is the per-coordinate Gaussian sigma.
// Single shapes yield one cloud of n points; four_class_set yields
// samples_per_class clouds per class, n points each.
SyntheticSet generate_synthetic(Shape shape, int n, double noise, std::uint64_t seed,
                                int samples_per_class = 10);

}  // namespace reebdeco
