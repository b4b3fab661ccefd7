#include "reebdeco/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include <Eigen/Dense>

#include "reebdeco/reeb_radius.hpp"

namespace reebdeco {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void Correspondence::validate(int nx, int ny) const {
    std::vector<bool> cx(nx, false), cy(ny, false);
    for (auto [x, y] : pairs) {
        if (x < 0 || y < 0 || x >= nx || y >= ny) throw SchemaError("correspondence index out of range");
        cx[x] = true;
        cy[y] = true;
    }
    if (!std::all_of(cx.begin(), cx.end(), [](bool b) { return b; }) ||
        !std::all_of(cy.begin(), cy.end(), [](bool b) { return b; }))
        throw SchemaError("correspondence projections must be surjective");
}

std::pair<double, double> check_rs_correspondence(const FunctionGraph& f1,
                                                  const FunctionGraph& f2,
                                                  const Correspondence& corr) {
    if (!f1.node_metric || !f2.node_metric) throw SchemaError("both fields need node metrics");
    if (!f1.has_values() || !f2.has_values()) throw SchemaError("both fields need values");
    if (f1.value_dim != f2.value_dim) throw SchemaError("codomain dimensions differ");
    corr.validate(f1.n, f2.n);

    double r = 0.0, s = 0.0;
    for (std::size_t i = 0; i < corr.pairs.size(); ++i) {
        auto [x, y] = corr.pairs[i];
        s = std::max(s, euclidean(f1.value(x), f2.value(y)));
        for (std::size_t j = i + 1; j < corr.pairs.size(); ++j) {
            auto [x2, y2] = corr.pairs[j];
            double distortion = std::abs(f1.node_metric->at(x, x2) - f2.node_metric->at(y, y2));
            r = std::max(r, distortion / 2.0);
        }
    }
    return {r, s};
}

namespace {

// Branch-and-bound over correspondences. Every minimal correspondence is the
// union of a total assignment X -> Y and one Y -> X on the still-uncovered
// part, and max-type costs are monotone under adding pairs, so this search is
// exhaustive.
struct CorrSearch {
    int nx, ny;
    const std::function<double(int, int)>& unary;
    const std::function<double(int, int, int, int)>& binary;
    std::vector<std::pair<int, int>> chosen;
    std::vector<int> covered_y;
    double best = kInf;

    double extend_cost(int x, int y, double cur) const {
        double c = std::max(cur, unary(x, y));
        for (auto [px, py] : chosen) {
            if (c >= best) return c;
            c = std::max(c, binary(px, py, x, y));
        }
        return c;
    }

    void phase_y(std::size_t yi, double cur) {
        if (cur >= best) return;
        while (yi < std::size_t(ny) && covered_y[yi]) ++yi;
        if (yi == std::size_t(ny)) {
            best = cur;
            return;
        }
        for (int x = 0; x < nx; ++x) {
            double c = extend_cost(x, int(yi), cur);
            if (c >= best) continue;
            chosen.emplace_back(x, int(yi));
            ++covered_y[yi];
            phase_y(yi + 1, c);
            --covered_y[yi];
            chosen.pop_back();
        }
    }

    void phase_x(int x, double cur) {
        if (cur >= best) return;
        if (x == nx) {
            phase_y(0, cur);
            return;
        }
        for (int y = 0; y < ny; ++y) {
            double c = extend_cost(x, y, cur);
            if (c >= best) continue;
            chosen.emplace_back(x, y);
            ++covered_y[y];
            phase_x(x + 1, c);
            --covered_y[y];
            chosen.pop_back();
        }
    }
};

}  // namespace

double min_correspondence_cost(int nx, int ny,
                               const std::function<double(int, int)>& unary,
                               const std::function<double(int, int, int, int)>& binary) {
    if (nx <= 0 || ny <= 0) throw SchemaError("correspondence search needs nonempty sets");
    CorrSearch search{nx, ny, unary, binary, {}, std::vector<int>(ny, 0), kInf};
    search.chosen.reserve(nx + ny);
    search.phase_x(0, 0.0);
    return search.best;
}

double brute_gh(const FunctionGraph& f1, const FunctionGraph& f2, int max_size) {
    if (f1.n > max_size || f2.n > max_size)
        throw SizeError("brute-force GH limited to " + std::to_string(max_size) + " nodes");
    if (!f1.node_metric || !f2.node_metric) throw SchemaError("both fields need node metrics");
    if (!f1.has_values() || !f2.has_values()) throw SchemaError("both fields need values");
    auto unary = [&](int x, int y) { return euclidean(f1.value(x), f2.value(y)); };
    auto binary = [&](int x, int y, int x2, int y2) {
        return std::abs(f1.node_metric->at(x, x2) - f2.node_metric->at(y, y2)) / 2.0;
    };
    return min_correspondence_cost(f1.n, f2.n, unary, binary);
}

ConnectivityConstants fit_connectivity(const SymMatrix& metric,
                                       const std::vector<std::vector<double>>& rho, double eps) {
    if (eps < 0) throw SchemaError("eps must be nonnegative");
    int n = metric.size();
    double L = 0.0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            double slackless = rho[x][y] - 2.0 * eps;
            if (slackless <= 0) continue;
            double d = metric.at(x, y);
            if (d == 0) return {kInf, eps};
            L = std::max(L, slackless / d);
        }
    return {L, eps};
}

ConnectivityConstants fit_connectivity(const FunctionGraph& graph, double eps) {
    if (!graph.node_metric) throw SchemaError("connectivity fit needs a node metric");
    auto rho = reeb_radius_matrix(graph);
    return fit_connectivity(*graph.node_metric, rho, eps);
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Log-domain Sinkhorn with per-row/column max subtraction; robust for any
// cost scale and regularization strength. Returns a strictly feasible
// coupling via a final rank-one rounding of the residual marginals.
MatrixXd sinkhorn_log(const MatrixXd& cost, const VectorXd& p, const VectorXd& q, double eps,
                      int max_iter, double marginal_tol) {
    int n1 = int(cost.rows()), n2 = int(cost.cols());
    MatrixXd base = -cost / eps;  // exponent without potentials
    VectorXd f = VectorXd::Zero(n1), g = VectorXd::Zero(n2);
    VectorXd log_p = p.array().log().matrix(), log_q = q.array().log().matrix();

    auto lse_rows = [&](VectorXd& out) {
        for (int i = 0; i < n1; ++i) {
            double m = -kInf;
            for (int j = 0; j < n2; ++j) m = std::max(m, base(i, j) + g(j) / eps);
            double acc = 0.0;
            for (int j = 0; j < n2; ++j) acc += std::exp(base(i, j) + g(j) / eps - m);
            out(i) = m + std::log(acc);
        }
    };
    auto lse_cols = [&](VectorXd& out) {
        for (int j = 0; j < n2; ++j) {
            double m = -kInf;
            for (int i = 0; i < n1; ++i) m = std::max(m, base(i, j) + f(i) / eps);
            double acc = 0.0;
            for (int i = 0; i < n1; ++i) acc += std::exp(base(i, j) + f(i) / eps - m);
            out(j) = m + std::log(acc);
        }
    };

    VectorXd lse(std::max(n1, n2));
    VectorXd row_lse(n1), col_lse(n2);
    for (int iter = 0; iter < max_iter; ++iter) {
        lse_rows(row_lse);
        f = eps * (log_p - row_lse);
        lse_cols(col_lse);
        g = eps * (log_q - col_lse);
        // Row-marginal violation after the column step.
        lse_rows(row_lse);
        double err = 0.0;
        for (int i = 0; i < n1; ++i) err += std::abs(std::exp(row_lse(i)) - p(i));
        if (err < marginal_tol) break;
    }

    MatrixXd coupling(n1, n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            coupling(i, j) = std::exp(base(i, j) + (f(i) + g(j)) / eps);

    // Round to exact feasibility (scale rows/cols down, then spread the
    // residual as a rank-one correction).
    VectorXd r = coupling.rowwise().sum();
    for (int i = 0; i < n1; ++i)
        if (r(i) > p(i)) coupling.row(i) *= p(i) / r(i);
    VectorXd s = coupling.colwise().sum();
    for (int j = 0; j < n2; ++j)
        if (s(j) > q(j)) coupling.col(j) *= q(j) / s(j);
    VectorXd dr = p - coupling.rowwise().sum().cwiseMin(p);
    VectorXd dc = q - coupling.colwise().sum().transpose().cwiseMin(q);
    double total = dr.sum();
    if (total > 0) coupling += dr * dc.transpose() / total;
    return coupling;
}

double gw_objective(const MatrixXd& feature, const MatrixXd& c1, const MatrixXd& c2,
                    const MatrixXd& t, double alpha) {
    VectorXd r = t.rowwise().sum();
    VectorXd s = t.colwise().sum().transpose();
    double quad = (c1.array().square().matrix() * r).dot(r) +
                  (c2.array().square().matrix() * s).dot(s) -
                  2.0 * (c1 * t * c2).cwiseProduct(t).sum();
    double lin = feature.cwiseProduct(t).sum();
    return (1.0 - alpha) * lin + alpha * quad;
}

MatrixXd metric_to_eigen(const SymMatrix& m) {
    int n = m.size();
    MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m.at(i, j);
    return out;
}

MatrixXd feature_cost_matrix(const DecoratedReebGraph& a, const DecoratedReebGraph& b) {
    MatrixXd m(a.class_count, b.class_count);
    for (int i = 0; i < a.class_count; ++i) {
        if (a.decorations.empty() || !a.decorations[i])
            throw SchemaError("fgw with alpha < 1 requires a decoration on every class");
        const auto* img_a = std::get_if<PersistenceImage>(&*a.decorations[i]);
        if (!img_a) throw SchemaError("fgw feature cost requires persistence-image decorations");
        for (int j = 0; j < b.class_count; ++j) {
            if (b.decorations.empty() || !b.decorations[j])
                throw SchemaError("fgw with alpha < 1 requires a decoration on every class");
            const auto* img_b = std::get_if<PersistenceImage>(&*b.decorations[j]);
            if (!img_b) throw SchemaError("fgw feature cost requires persistence-image decorations");
            if (img_a->rows != img_b->rows || img_a->cols != img_b->cols)
                throw SchemaError("persistence images must share a resolution");
            m(i, j) = img_a->l2_distance(*img_b);
        }
    }
    return m;
}

// Greedy rounding of the coupling to a permutation (square case); any
// feasible coupling is a valid upper bound for the minimum, and on
// near-isometric inputs the permutation is the exact optimum.
double hardened_objective(const MatrixXd& feature, const MatrixXd& c1, const MatrixXd& c2,
                          const MatrixXd& t, double alpha) {
    int n = int(t.rows());
    std::vector<std::tuple<double, int, int>> entries;
    entries.reserve(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) entries.emplace_back(t(i, j), i, j);
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return std::get<2>(a) < std::get<2>(b);
    });
    std::vector<bool> row_used(n, false), col_used(n, false);
    MatrixXd perm = MatrixXd::Zero(n, n);
    int placed = 0;
    for (const auto& [v, i, j] : entries) {
        if (row_used[i] || col_used[j]) continue;
        perm(i, j) = 1.0 / n;
        row_used[i] = col_used[j] = true;
        if (++placed == n) break;
    }
    return gw_objective(feature, c1, c2, perm, alpha);
}

}  // namespace

double fgw_objective(const std::vector<double>& feature_cost, const SymMatrix& ca,
                     const SymMatrix& cb, const std::vector<double>& coupling, double alpha) {
    int n1 = ca.size(), n2 = cb.size();
    MatrixXd feature = MatrixXd::Zero(n1, n2);
    if (!feature_cost.empty())
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) feature(i, j) = feature_cost[std::size_t(i) * n2 + j];
    MatrixXd t(n1, n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) t(i, j) = coupling[std::size_t(i) * n2 + j];
    return gw_objective(feature, metric_to_eigen(ca), metric_to_eigen(cb), t, alpha);
}

FgwResult fgw(const DecoratedReebGraph& a, const DecoratedReebGraph& b, const FgwOptions& options) {
    if (options.alpha < 0 || options.alpha > 1) throw SchemaError("alpha must be in [0,1]");
    if (!(options.ot_eps > 0)) throw SchemaError("ot_eps must be positive");
    int n1 = a.class_count, n2 = b.class_count;
    double alpha = options.alpha;

    MatrixXd feature = alpha < 1.0 ? feature_cost_matrix(a, b) : MatrixXd::Zero(n1, n2);
    MatrixXd c1 = metric_to_eigen(a.quotient_metric);
    MatrixXd c2 = metric_to_eigen(b.quotient_metric);
    VectorXd p = VectorXd::Constant(n1, 1.0 / n1);
    VectorXd q = VectorXd::Constant(n2, 1.0 / n2);

    MatrixXd coupling = p * q.transpose();
    double best = gw_objective(feature, c1, c2, coupling, alpha);
    MatrixXd best_coupling = coupling;
    double prev = best;
    bool converged = false;

    MatrixXd c1_sq = c1.array().square().matrix();
    MatrixXd c2_sq = c2.array().square().matrix();
    for (int outer = 0; outer < options.max_outer; ++outer) {
        // Gradient of the quadratic term at the current feasible coupling.
        MatrixXd const_part = (c1_sq * p).replicate(1, n2) +
                              ((c2_sq * q).transpose()).replicate(n1, 1);
        MatrixXd grad = (1.0 - alpha) * feature + alpha * 2.0 * (const_part - 2.0 * c1 * coupling * c2);
        coupling = sinkhorn_log(grad, p, q, options.ot_eps, options.max_sinkhorn,
                                options.marginal_tol);
        double value = gw_objective(feature, c1, c2, coupling, alpha);
        if (value < best) {
            best = value;
            best_coupling = coupling;
        }
        if (std::abs(value - prev) < options.objective_tol) {
            converged = true;
            break;
        }
        prev = value;
    }

    if (n1 == n2) {
        double hard = hardened_objective(feature, c1, c2, best_coupling, alpha);
        if (hard < best) best = hard;
    }

    FgwResult result;
    result.value = best;
    result.converged = converged;
    result.coupling.resize(std::size_t(n1) * n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) result.coupling[std::size_t(i) * n2 + j] = best_coupling(i, j);
    return result;
}

std::vector<std::vector<double>> mds_embed(const SymMatrix& dist, int dims) {
    if (dims <= 0) throw SchemaError("embedding dimension must be positive");
    int n = dist.size();
    MatrixXd d2(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = dist.at(i, j);
            d2(i, j) = v * v;
        }
    MatrixXd centering = MatrixXd::Identity(n, n) - MatrixXd::Constant(n, n, 1.0 / n);
    MatrixXd gram = -0.5 * centering * d2 * centering;

    Eigen::SelfAdjointEigenSolver<MatrixXd> solver(gram);
    if (solver.info() != Eigen::Success) throw Error(errc::other, "MDS eigendecomposition failed");

    std::vector<std::vector<double>> out(n, std::vector<double>(dims, 0.0));
    for (int d = 0; d < dims && d < n; ++d) {
        int idx = n - 1 - d;  // eigenvalues ascend; take from the top
        double lambda = solver.eigenvalues()(idx);
        if (lambda <= 0) continue;
        VectorXd axis = solver.eigenvectors().col(idx) * std::sqrt(lambda);
        for (int i = 0; i < n; ++i) {
            if (std::abs(axis(i)) > 1e-12) {
                if (axis(i) < 0) axis = -axis;
                break;
            }
        }
        for (int i = 0; i < n; ++i) out[i][d] = axis(i);
    }
    return out;
}

}  // namespace reebdeco
