#include "reebdeco/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace reebdeco {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Builder {
    const SymMatrix& metric;
    const std::vector<double>& appearance;
    double r_max;
    int max_dim;
    std::size_t capacity;
    std::vector<Simplex> out;

    void emit(const std::vector<int>& verts, double scale) {
        if (out.size() >= capacity)
            throw CapacityError("simplex capacity exceeded (" + std::to_string(capacity) + ")");
        out.push_back({verts, scale});
    }

    // Expands each simplex by vertices above its maximum, tracking the scale
    // incrementally; any extension pushing the scale past r_max is cut off
    // (its further extensions would only be larger in lex order, not scale,
    // so only this branch dies).
    void extend(std::vector<int>& verts, double scale) {
        if (int(verts.size()) - 1 >= max_dim) return;
        int n = metric.size();
        for (int u = verts.back() + 1; u < n; ++u) {
            double s = std::max(scale, appearance[u]);
            for (int v : verts) s = std::max(s, metric.at(v, u));
            if (s > r_max) continue;
            verts.push_back(u);
            emit(verts, s);
            extend(verts, s);
            verts.pop_back();
        }
    }

    std::vector<Simplex> run() {
        int n = metric.size();
        std::vector<int> verts;
        for (int v = 0; v < n; ++v) {
            if (appearance[v] > r_max) continue;
            verts.assign(1, v);
            emit(verts, appearance[v]);
            extend(verts, appearance[v]);
        }
        std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
            if (a.scale != b.scale) return a.scale < b.scale;
            if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
            return a.vertices < b.vertices;
        });
        return std::move(out);
    }
};

FilteredComplex build_filtration(const SymMatrix& metric, const std::vector<double>& appearance,
                                 double r_max, int max_dim, std::size_t capacity) {
    if (max_dim < 0) throw SchemaError("max_dim must be nonnegative");
    if (!(r_max >= 0)) throw SchemaError("r_max must be nonnegative");
    FilteredComplex fc;
    fc.vertex_count = metric.size();
    fc.max_dim = max_dim;
    fc.r_max = r_max;
    Builder builder{metric, appearance, r_max, max_dim, capacity, {}};
    fc.simplices = builder.run();
    return fc;
}

}  // namespace

FilteredComplex vr_filtration(const SymMatrix& metric, double r_max, int max_dim,
                              std::size_t capacity) {
    std::vector<double> appearance(metric.size(), 0.0);
    return build_filtration(metric, appearance, r_max, max_dim, capacity);
}

FilteredComplex constrained_vr_filtration(const SymMatrix& metric, const ReebRadiusField& rho,
                                          const SliceSchedule& schedule, double r_max, int max_dim,
                                          std::size_t capacity) {
    if (schedule.lambda < 0 || schedule.c < 0) throw SchemaError("schedule parameters must be nonnegative");
    if (int(rho.rho.size()) != metric.size()) throw SchemaError("rho field size mismatch");
    std::vector<double> appearance(metric.size());
    for (int v = 0; v < metric.size(); ++v) {
        double r = rho.rho[v];
        if (r <= schedule.c)
            appearance[v] = 0.0;
        else if (schedule.lambda == 0.0)
            appearance[v] = kInf;  // never enters
        else
            appearance[v] = (r - schedule.c) / schedule.lambda;
    }
    return build_filtration(metric, appearance, r_max, max_dim, capacity);
}

namespace {

// Face lookup keys: vertex indices packed into 64 bits. The packing width is
// picked per complex from the vertex count and dimension.
struct FaceKeyer {
    int bits;
    explicit FaceKeyer(int vertex_count, int max_dim) {
        int needed = max_dim + 1;  // vertices per top simplex
        if (vertex_count <= (1 << 8) && needed <= 8)
            bits = 8;
        else if (vertex_count <= (1 << 16) && needed <= 4)
            bits = 16;
        else if (vertex_count <= (1 << 21) && needed <= 3)
            bits = 21;
        else
            throw CapacityError("complex too large to index faces");
    }
    std::uint64_t key(const std::vector<int>& verts, int skip) const {
        std::uint64_t k = 0;
        int shift = 0;
        for (int i = 0; i < int(verts.size()); ++i) {
            if (i == skip) continue;
            k |= (std::uint64_t(verts[i]) + 1) << shift;
            shift += bits;
        }
        return k;
    }
};

// Z/2 column addition: symmetric difference of sorted index vectors.
void add_column(std::vector<int>& target, const std::vector<int>& other, std::vector<int>& scratch) {
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < target.size() && j < other.size()) {
        if (target[i] < other[j])
            scratch.push_back(target[i++]);
        else if (other[j] < target[i])
            scratch.push_back(other[j++]);
        else {
            ++i;
            ++j;
        }
    }
    scratch.insert(scratch.end(), target.begin() + i, target.end());
    scratch.insert(scratch.end(), other.begin() + j, other.end());
    target.swap(scratch);
}

}  // namespace

Barcode reduce_and_extract(const FilteredComplex& complex, int k) {
    if (k < 0) throw SchemaError("homology degree must be nonnegative");
    if (k > complex.max_dim - 1)
        throw SchemaError("homology degree requires max_dim >= k + 1");

    const auto& simplices = complex.simplices;
    std::size_t n = simplices.size();

    FaceKeyer keyer(complex.vertex_count, complex.max_dim);
    std::unordered_map<std::uint64_t, int> index_of;
    index_of.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i)
        index_of.emplace(keyer.key(simplices[i].vertices, -1), int(i));

    std::vector<int> partner(n, -1);       // creator index -> destroyer index
    std::vector<bool> cleared(n, false);   // killed creators, skipped during their own pass
    std::vector<bool> destroyer(n, false); // columns that reduce to a nonzero pivot
    std::vector<int> pivot_owner(n, -1);   // row -> column that holds this pivot

    // Dimension-descending pass with clearing: once a column's pivot names a
    // lower creator, that creator's own column is known to reduce to zero.
    std::vector<std::vector<int>> reduced_cols;
    std::vector<int> boundary, scratch;
    for (int d = complex.max_dim; d >= 1; --d) {
        reduced_cols.clear();
        std::fill(pivot_owner.begin(), pivot_owner.end(), -1);
        std::vector<int> col_store_index(n, -1);
        for (std::size_t j = 0; j < n; ++j) {
            if (simplices[j].dim() != d || cleared[j]) continue;
            boundary.clear();
            const auto& verts = simplices[j].vertices;
            for (int skip = 0; skip < int(verts.size()); ++skip)
                boundary.push_back(index_of.at(keyer.key(verts, skip)));
            std::sort(boundary.begin(), boundary.end());
            while (!boundary.empty()) {
                int low = boundary.back();
                int owner = pivot_owner[low];
                if (owner < 0) break;
                add_column(boundary, reduced_cols[col_store_index[owner]], scratch);
            }
            if (!boundary.empty()) {
                int low = boundary.back();
                pivot_owner[low] = int(j);
                col_store_index[j] = int(reduced_cols.size());
                reduced_cols.push_back(boundary);
                partner[low] = int(j);
                cleared[low] = true;
                destroyer[j] = true;
            }
        }
    }

    Barcode bc;
    for (std::size_t i = 0; i < n; ++i) {
        if (simplices[i].dim() != k) continue;
        if (partner[i] >= 0) {
            double birth = simplices[i].scale;
            double death = simplices[partner[i]].scale;
            if (death > birth) bc.intervals.push_back({k, birth, death, false});
        } else if (!destroyer[i]) {
            // A creator that was never killed survives to the truncation scale.
            bc.intervals.push_back({k, simplices[i].scale, complex.r_max, true});
        }
    }
    bc.sort_canonical();
    return bc;
}

namespace {

double match_cost(const Interval& a, const Interval& b) {
    return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

// Kuhn's augmenting-path matching on the threshold graph. A bar whose half
// persistence fits under theta may retire to the diagonal; the others must be
// matched across. By Mendelsohn-Dulmage, matchings saturating the two
// must-match sides separately combine into one saturating both, so
// feasibility factors into two one-sided checks.
struct ThresholdMatcher {
    const std::vector<Interval>& a;
    const std::vector<Interval>& b;
    double theta = 0.0;

    std::vector<int> match_to;  // partner index on the `to` side
    std::vector<bool> seen;

    bool try_assign(const std::vector<Interval>& from, const std::vector<Interval>& to, int fi) {
        for (int ti = 0; ti < int(to.size()); ++ti) {
            if (seen[ti] || match_cost(from[fi], to[ti]) > theta) continue;
            seen[ti] = true;
            if (match_to[ti] < 0 || try_assign(from, to, match_to[ti])) {
                match_to[ti] = fi;
                return true;
            }
        }
        return false;
    }

    bool saturates(const std::vector<Interval>& from, const std::vector<Interval>& to) {
        match_to.assign(to.size(), -1);
        for (int fi = 0; fi < int(from.size()); ++fi) {
            if (from[fi].persistence() / 2.0 <= theta) continue;
            seen.assign(to.size(), false);
            if (!try_assign(from, to, fi)) return false;
        }
        return true;
    }

    bool feasible() { return saturates(a, b) && saturates(b, a); }
};

}  // namespace

double bottleneck_intervals(const std::vector<Interval>& a_all, const std::vector<Interval>& b_all) {
    std::vector<Interval> a, b, a_open, b_open;
    for (const auto& iv : a_all) (iv.open ? a_open : a).push_back(iv);
    for (const auto& iv : b_all) (iv.open ? b_open : b).push_back(iv);

    if (a_open.size() != b_open.size())
        throw InfiniteDistanceError("open-bar counts differ; bottleneck distance is infinite");

    // Open bars have a forced type of partner; sorted birth pairing minimizes
    // the max birth displacement on the line.
    double open_cost = 0.0;
    auto by_birth = [](const Interval& x, const Interval& y) { return x.birth < y.birth; };
    std::sort(a_open.begin(), a_open.end(), by_birth);
    std::sort(b_open.begin(), b_open.end(), by_birth);
    for (std::size_t i = 0; i < a_open.size(); ++i)
        open_cost = std::max(open_cost, std::abs(a_open[i].birth - b_open[i].birth));

    if (a.empty() && b.empty()) return open_cost;

    std::vector<double> candidates{0.0};
    for (const auto& x : a) candidates.push_back(x.persistence() / 2.0);
    for (const auto& x : b) candidates.push_back(x.persistence() / 2.0);
    for (const auto& x : a)
        for (const auto& y : b) candidates.push_back(match_cost(x, y));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    ThresholdMatcher matcher{a, b, 0.0, {}, {}};
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        matcher.theta = candidates[mid];
        if (matcher.feasible())
            hi = mid;
        else
            lo = mid + 1;
    }
    return std::max(open_cost, candidates[lo]);
}

double bottleneck(const Barcode& a, const Barcode& b, int k) {
    return bottleneck_intervals(a.in_dim(k), b.in_dim(k));
}

}  // namespace reebdeco
