#include "reebdeco/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "reebdeco/rng.hpp"

namespace reebdeco {

double euclidean(std::span<const double> a, std::span<const double> b) {
    double sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

double SymMatrix::max_entry() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, v);
    return m;
}

void SymMatrix::check_metric_axioms(double tol) const {
    for (int i = 0; i < n_; ++i) {
        if (std::abs(at(i, i)) > tol) throw SchemaError("metric has nonzero diagonal");
        for (int j = i + 1; j < n_; ++j) {
            double dij = at(i, j), dji = at(j, i);
            if (!std::isfinite(dij) || dij < 0) throw SchemaError("metric entry negative or non-finite");
            if (std::abs(dij - dji) > tol) throw SchemaError("metric not symmetric");
        }
    }
    auto check_triple = [&](int i, int j, int k) {
        if (at(i, k) > at(i, j) + at(j, k) + tol)
            throw SchemaError("metric violates the triangle inequality");
    };
    if (n_ <= 512) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k) check_triple(i, j, k);
    } else {
        // Exhaustive O(n^3) is too slow at this size; sample triples.
        SplitMix64 rng(0x6d657472696373ULL);
        for (int t = 0; t < 2'000'000; ++t) {
            int i = int(rng.next_below(n_));
            int j = int(rng.next_below(n_));
            int k = int(rng.next_below(n_));
            check_triple(i, j, k);
        }
    }
}

std::vector<std::vector<int>> FunctionGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

void FunctionGraph::assign_scalar_values(const std::vector<double>& field) {
    if (int(field.size()) != n) throw SchemaError("field length does not match node count");
    value_dim = 1;
    values = field;
}

int component_count(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = n;
    for (auto [a, b] : edges) {
        int ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --comps;
        }
    }
    return comps;
}

void FunctionGraph::validate() const {
    if (n <= 0) throw SchemaError("graph must have at least one node");
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) throw SchemaError("edge index out of range");
        if (a == b) throw NonSimpleError("loop edge");
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second) throw NonSimpleError("duplicate edge");
    }
    if (has_values()) {
        if (value_dim <= 0 || values.size() != std::size_t(n) * value_dim)
            throw SchemaError("value array shape mismatch");
        for (double v : values)
            if (!std::isfinite(v)) throw SchemaError("non-finite node value");
    }
    if (node_metric) {
        if (node_metric->size() != n) throw SchemaError("node metric size mismatch");
        node_metric->check_metric_axioms();
    }
    if (positions && int(positions->size()) != n) throw SchemaError("positions size mismatch");
    int comps = component_count(n, edges);
    if (comps != 1) throw DisconnectedError("graph is disconnected", comps);
}

void Barcode::sort_canonical() {
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death != b.death) return a.death < b.death;
        return a.open < b.open;
    });
}

std::vector<Interval> Barcode::in_dim(int k) const {
    std::vector<Interval> out;
    for (const auto& iv : intervals)
        if (iv.dim == k) out.push_back(iv);
    return out;
}

double PersistenceImage::total_mass() const {
    double s = 0.0;
    for (double p : pixels) s += p;
    return s;
}

double PersistenceImage::l2_distance(const PersistenceImage& other) const {
    double sq = 0.0;
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        double d = pixels[i] - other.pixels[i];
        sq += d * d;
    }
    return std::sqrt(sq);
}

void DecoratedReebGraph::validate() const {
    if (class_count <= 0) throw SchemaError("quotient must have at least one class");
    if (int(representative.size()) != class_count) throw SchemaError("representative size mismatch");
    if (quotient_metric.size() != class_count) throw SchemaError("quotient metric size mismatch");
    if (!decorations.empty() && int(decorations.size()) != class_count)
        throw SchemaError("decorations size mismatch");
    std::vector<bool> hit(class_count, false);
    for (int c : class_of) {
        if (c < 0 || c >= class_count) throw SchemaError("class index out of range");
        hit[c] = true;
    }
    for (int c = 0; c < class_count; ++c) {
        if (!hit[c]) throw SchemaError("class without members");
        int rep = representative[c];
        if (rep < 0 || rep >= int(class_of.size()) || class_of[rep] != c)
            throw SchemaError("representative is not a section of class_of");
    }
    for (auto [a, b] : edges)
        if (a < 0 || b < 0 || a >= class_count || b >= class_count || a == b)
            throw SchemaError("bad quotient edge");
}

}  // namespace reebdeco
