#include "reebdeco/synthetic.hpp"

#include <cmath>

#include "reebdeco/rng.hpp"

namespace reebdeco {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

void add_noise(PointCloud& cloud, double noise, SplitMix64& rng) {
    if (noise <= 0) return;
    for (auto& p : cloud.points)
        for (double& x : p) x += noise * rng.next_normal();
}

// Unit circle in the x-z plane, scaled; "standing" so the z-height function
// sees the full loop.
PointCloud sample_cycle(int n, SplitMix64& rng, double radius) {
    PointCloud c;
    for (int i = 0; i < n; ++i) {
        double t = kTau * rng.next_double();
        c.points.push_back({radius * std::cos(t), 0.0, radius * std::sin(t)});
    }
    return c;
}

PointCloud sample_sphere(int n, SplitMix64& rng, double radius) {
    PointCloud c;
    for (int i = 0; i < n; ++i) {
        double z = rng.next_range(-1.0, 1.0);
        double phi = kTau * rng.next_double();
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        c.points.push_back({radius * r * std::cos(phi), radius * r * std::sin(phi), radius * z});
    }
    return c;
}

// Area-uniform torus sampling: reject the tube angle with weight
// (R + r cos) / (R + r).
PointCloud sample_torus(int n, SplitMix64& rng, double big_r, double small_r, bool standing) {
    PointCloud c;
    while (int(c.points.size()) < n) {
        double theta = kTau * rng.next_double();
        double phi = kTau * rng.next_double();
        double accept = (big_r + small_r * std::cos(phi)) / (big_r + small_r);
        if (rng.next_double() > accept) continue;
        double x = (big_r + small_r * std::cos(phi)) * std::cos(theta);
        double y = (big_r + small_r * std::cos(phi)) * std::sin(theta);
        double z = small_r * std::sin(phi);
        if (standing)
            c.points.push_back({x, z, y});  // rotate so the hole axis is horizontal
        else
            c.points.push_back({x, y, z});
    }
    return c;
}

// Flat torus (radii 2 / 0.7) wedged at (-2.7, 0, 0) with a standing circle of
// radius 3 in the x-z plane centered at (-5.7, 0, 0). Points split roughly
// by surface measure: 70% torus, 30% circle.
PointCloud sample_torus_wedge_circle(int n, SplitMix64& rng) {
    int n_torus = int(std::round(0.7 * n));
    PointCloud c = sample_torus(n_torus, rng, 2.0, 0.7, false);
    for (int i = n_torus; i < n; ++i) {
        double t = kTau * rng.next_double();
        c.points.push_back({-5.7 + 3.0 * std::cos(t), 0.0, 3.0 * std::sin(t)});
    }
    return c;
}

PointCloud sample_shape(Shape shape, int n, SplitMix64& rng) {
    switch (shape) {
        case Shape::cycle: return sample_cycle(n, rng, 1.0);
        case Shape::sphere: return sample_sphere(n, rng, 2.0);
        case Shape::torus: return sample_torus(n, rng, 2.0, 0.7, false);
        case Shape::torus_wedge_circle: return sample_torus_wedge_circle(n, rng);
        default: throw SchemaError("not a single-cloud shape");
    }
}

}  // namespace

Shape shape_from_string(const std::string& name) {
    if (name == "torus_wedge_circle") return Shape::torus_wedge_circle;
    if (name == "sphere") return Shape::sphere;
    if (name == "torus") return Shape::torus;
    if (name == "cycle") return Shape::cycle;
    if (name == "four_class_set") return Shape::four_class_set;
    throw SchemaError("unknown shape: " + name);
}

std::string shape_to_string(Shape shape) {
    switch (shape) {
        case Shape::torus_wedge_circle: return "torus_wedge_circle";
        case Shape::sphere: return "sphere";
        case Shape::torus: return "torus";
        case Shape::cycle: return "cycle";
        case Shape::four_class_set: return "four_class_set";
    }
    return "?";
}

SyntheticSet generate_synthetic(Shape shape, int n, double noise, std::uint64_t seed,
                                int samples_per_class) {
    if (n < 10) throw SchemaError("generator requires n >= 10");
    SplitMix64 root(seed);
    SyntheticSet set;

    if (shape != Shape::four_class_set) {
        SplitMix64 rng = root.derive(1);
        PointCloud cloud = sample_shape(shape, n, rng);
        add_noise(cloud, noise, rng);
        set.clouds.push_back(std::move(cloud));
        set.labels.push_back(0);
        return set;
    }

    // Scale-matched variants so the classes differ by topology more than by
    // raw metric size: standing cycle and torus, sphere of comparable height.
    for (int cls = 0; cls < 4; ++cls) {
        for (int sample = 0; sample < samples_per_class; ++sample) {
            SplitMix64 rng = root.derive(std::uint64_t(cls) * 1000 + sample + 1);
            PointCloud cloud;
            switch (cls) {
                case 0: cloud = sample_cycle(n, rng, 2.7); break;
                case 1: cloud = sample_sphere(n, rng, 2.7); break;
                case 2: cloud = sample_torus(n, rng, 2.0, 0.7, true); break;
                default: cloud = sample_torus_wedge_circle(n, rng); break;
            }
            add_noise(cloud, noise, rng);
            set.clouds.push_back(std::move(cloud));
            set.labels.push_back(cls);
        }
    }
    return set;
}

}  // namespace reebdeco
