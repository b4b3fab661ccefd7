#include "reebdeco/reeb_quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "reebdeco/reeb_radius.hpp"

namespace reebdeco {

FunctionGraph round_values(const FunctionGraph& graph, double theta) {
    if (!(theta > 0)) throw SchemaError("rounding step must be positive");
    if (!graph.has_values()) throw SchemaError("graph has no values");
    FunctionGraph out = graph;
    for (double& v : out.values) v = theta * std::round(v / theta);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

DecoratedReebGraph smooth_quotient_with_matrix(const FunctionGraph& graph, double epsilon,
                                               const std::vector<std::vector<double>>& rho) {
    if (epsilon < 0) throw SchemaError("epsilon must be nonnegative");
    int n = graph.n;

    // Group nodes by exact (bit-level) value; only same-level pairs can merge.
    std::map<std::vector<double>, std::vector<int>> levels;
    for (int v = 0; v < n; ++v) {
        auto val = graph.value(v);
        levels[std::vector<double>(val.begin(), val.end())].push_back(v);
    }

    UnionFind uf(n);
    for (const auto& [value, members] : levels) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int a = members[i], b = members[j];
                if (rho[a][b] <= epsilon && rho[b][a] <= epsilon) uf.unite(a, b);
            }
    }

    // Classes ordered by their minimal member, which doubles as representative.
    std::vector<int> min_member(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = uf.find(v);
        if (min_member[r] < 0 || v < min_member[r]) min_member[r] = v;
    }
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (min_member[uf.find(v)] == v) reps.push_back(v);
    std::sort(reps.begin(), reps.end());

    DecoratedReebGraph drg;
    drg.class_count = int(reps.size());
    drg.representative = reps;
    drg.class_of.assign(n, -1);
    std::vector<int> class_of_root(n, -1);
    for (int c = 0; c < drg.class_count; ++c) class_of_root[uf.find(reps[c])] = c;
    for (int v = 0; v < n; ++v) drg.class_of[v] = class_of_root[uf.find(v)];

    std::set<std::pair<int, int>> quotient_edges;
    for (auto [a, b] : graph.edges) {
        int ca = drg.class_of[a], cb = drg.class_of[b];
        if (ca != cb) quotient_edges.insert(std::minmax(ca, cb));
    }
    drg.edges.assign(quotient_edges.begin(), quotient_edges.end());

    drg.quotient_metric = SymMatrix(drg.class_count);
    for (int i = 0; i < drg.class_count; ++i)
        for (int j = i + 1; j < drg.class_count; ++j) {
            int ri = reps[i], rj = reps[j];
            drg.quotient_metric.set(i, j, 2.0 * std::max(rho[ri][rj], rho[rj][ri]));
        }

    drg.decorations.assign(drg.class_count, std::nullopt);
    drg.params.epsilon = epsilon;
    return drg;
}

DecoratedReebGraph smooth_quotient(const FunctionGraph& graph, const QuotientSpec& spec) {
    if (!graph.has_values()) throw SchemaError("graph has no values");
    const FunctionGraph* working = &graph;
    FunctionGraph rounded;
    if (spec.round_step) {
        rounded = round_values(graph, *spec.round_step);
        working = &rounded;
    }
    auto rho = reeb_radius_matrix(*working);
    DecoratedReebGraph drg = smooth_quotient_with_matrix(*working, spec.epsilon, rho);
    drg.params.round_step = spec.round_step;
    return drg;
}

}  // namespace reebdeco
