#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reebdeco/errors.hpp"

namespace reebdeco {

// A point of the codomain M = R^m with the Euclidean metric.
struct MetricPoint {
    std::vector<double> coords;
    bool operator==(const MetricPoint&) const = default;
};

double euclidean(std::span<const double> a, std::span<const double> b);

// Dense symmetric matrix with zero diagonal, used for node metrics and
// quotient metrics.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), data_(std::size_t(n) * std::size_t(n), 0.0) {}

    int size() const { return n_; }
    double at(int i, int j) const { return data_[std::size_t(i) * n_ + j]; }
    void set(int i, int j, double v) {
        data_[std::size_t(i) * n_ + j] = v;
        data_[std::size_t(j) * n_ + i] = v;
    }
    const std::vector<double>& raw() const { return data_; }

    double max_entry() const;
    // Throws SchemaError unless symmetric, nonnegative, zero-diagonal and
    // triangle-respecting within tol. Triangle checks are exhaustive up to
    // 512 nodes and randomly sampled beyond.
    void check_metric_axioms(double tol = 1e-9) const;

    bool operator==(const SymMatrix&) const = default;

private:
    int n_ = 0;
    std::vector<double> data_;
};

// Finite simple connected graph with node values in R^m, an optional node
// metric and optional render positions. Node identity is a dense 0-based
// index; edges are stored canonically as (i, j) with i < j, sorted.
struct FunctionGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int value_dim = 0;
    std::vector<double> values;  // n * value_dim, row-major; empty until a field is assigned
    std::optional<SymMatrix> node_metric;
    std::optional<std::vector<std::vector<double>>> positions;

    bool has_values() const { return !values.empty(); }
    std::span<const double> value(int v) const {
        return {values.data() + std::size_t(v) * value_dim, std::size_t(value_dim)};
    }
    // d_M(g(v), g(w)); fast path for scalar values.
    double value_dist(int v, int w) const {
        if (value_dim == 1) {
            double d = values[v] - values[w];
            return d < 0 ? -d : d;
        }
        return euclidean(value(v), value(w));
    }
    double value_dist_to(std::span<const double> ref, int w) const {
        if (value_dim == 1) {
            double d = ref[0] - values[w];
            return d < 0 ? -d : d;
        }
        return euclidean(ref, value(w));
    }

    std::vector<std::vector<int>> adjacency() const;
    void assign_scalar_values(const std::vector<double>& field);

    // Validates all structural invariants; connectivity check throws
    // DisconnectedError, loops/duplicates throw NonSimpleError.
    void validate() const;

    bool operator==(const FunctionGraph&) const = default;
};

int component_count(int n, const std::vector<std::pair<int, int>>& edges);

// A barcode interval. `open` marks a class still alive at the filtration
// truncation scale; death then holds that scale (r_max).
struct Interval {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;
    bool open = false;

    double persistence() const { return death - birth; }
    bool operator==(const Interval&) const = default;
};

struct Barcode {
    std::vector<Interval> intervals;

    void sort_canonical();
    std::vector<Interval> in_dim(int k) const;
    bool operator==(const Barcode&) const = default;
};

// Fixed-resolution grid of weighted Gaussian mass in birth-persistence
// coordinates. pixels is row-major: row i spans the persistence axis, column
// j the birth axis.
struct PersistenceImage {
    int rows = 0;
    int cols = 0;
    double birth_min = 0.0, birth_max = 1.0;
    double pers_min = 0.0, pers_max = 1.0;
    double sigma = 1.0;
    std::vector<double> pixels;

    double total_mass() const;
    double l2_distance(const PersistenceImage& other) const;
    bool operator==(const PersistenceImage&) const = default;
};

using Decoration = std::variant<Barcode, PersistenceImage>;

struct QuotientParams {
    double epsilon = 0.0;
    std::optional<double> round_step;
    std::optional<double> lambda;
    std::optional<double> c;
    std::optional<int> homology_dim;
    std::optional<double> r_max;
    bool operator==(const QuotientParams&) const = default;
};

// Reeb quotient of a FunctionGraph: classes with min-index representatives,
// induced simple edges, the symmetrized quotient metric evaluated at
// representatives, and optional per-class decorations.
struct DecoratedReebGraph {
    int class_count = 0;
    std::vector<int> representative;            // class -> original node
    std::vector<int> class_of;                  // node -> class
    std::vector<std::pair<int, int>> edges;     // class pairs, i < j, sorted
    SymMatrix quotient_metric;                  // class_count x class_count
    std::vector<std::optional<Decoration>> decorations;  // size class_count
    QuotientParams params;

    void validate() const;
    bool operator==(const DecoratedReebGraph&) const = default;
};

}  // namespace reebdeco
