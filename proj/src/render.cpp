#include "reebdeco/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "reebdeco/rng.hpp"

namespace reebdeco {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Fruchterman-Reingold on a unit square, fixed iteration count, seeded.
std::vector<std::pair<double, double>> spring_layout(int n,
                                                     const std::vector<std::pair<int, int>>& edges,
                                                     std::uint64_t seed) {
    SplitMix64 rng(seed ^ 0x6c61796f7574ULL);
    std::vector<std::pair<double, double>> pos(n);
    for (auto& p : pos) p = {rng.next_double(), rng.next_double()};
    if (n == 1) return pos;
    double k = std::sqrt(1.0 / n);
    std::vector<std::pair<double, double>> disp(n);
    for (int iter = 0; iter < 80; ++iter) {
        double temp = 0.1 * (1.0 - iter / 80.0);
        for (auto& d : disp) d = {0.0, 0.0};
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double dx = pos[i].first - pos[j].first, dy = pos[i].second - pos[j].second;
                double d2 = dx * dx + dy * dy + 1e-9;
                double rep = k * k / d2;
                disp[i].first += dx * rep;
                disp[i].second += dy * rep;
                disp[j].first -= dx * rep;
                disp[j].second -= dy * rep;
            }
        for (auto [a, b] : edges) {
            double dx = pos[a].first - pos[b].first, dy = pos[a].second - pos[b].second;
            double d = std::sqrt(dx * dx + dy * dy) + 1e-9;
            double att = d / k;
            disp[a].first -= dx / d * att * 0.01;
            disp[a].second -= dy / d * att * 0.01;
            disp[b].first += dx / d * att * 0.01;
            disp[b].second += dy / d * att * 0.01;
        }
        for (int i = 0; i < n; ++i) {
            double dx = disp[i].first, dy = disp[i].second;
            double d = std::sqrt(dx * dx + dy * dy) + 1e-12;
            double step = std::min(d, temp);
            pos[i].first = std::clamp(pos[i].first + dx / d * step, 0.0, 1.0);
            pos[i].second = std::clamp(pos[i].second + dy / d * step, 0.0, 1.0);
        }
    }
    return pos;
}

constexpr double kBig = std::numeric_limits<double>::max();

// Map arbitrary planar coordinates into the canvas with a margin.
std::vector<std::pair<double, double>> fit_canvas(std::vector<std::pair<double, double>> pts,
                                                  double size, double margin) {
    double xmin = kBig, xmax = -kBig, ymin = kBig, ymax = -kBig;
    for (auto [x, y] : pts) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    for (auto& [x, y] : pts) {
        x = margin + (x - xmin) / span * (size - 2 * margin);
        y = size - margin - (y - ymin) / span * (size - 2 * margin);
    }
    return pts;
}

std::string svg_open(double w, double h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) + "\" height=\"" + fmt(h) +
           "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
}

std::string gray_fill(double t) {
    int level = int(std::clamp(255.0 * (1.0 - 0.8 * t), 0.0, 255.0));
    char buf[32];
    std::snprintf(buf, sizeof buf, "rgb(%d,%d,%d)", level, level / 2 + 60, 200 - level / 2);
    return buf;
}

std::vector<std::pair<double, double>> planar_positions(int n,
                                                        const std::vector<std::pair<int, int>>& edges,
                                                        const std::optional<std::vector<std::vector<double>>>& stored,
                                                        std::uint64_t seed) {
    if (stored) {
        std::vector<std::pair<double, double>> pts(n);
        for (int i = 0; i < n; ++i) {
            const auto& p = (*stored)[i];
            double x = p.empty() ? 0.0 : p[0];
            double y = p.size() > 2 ? p[2] : (p.size() > 1 ? p[1] : 0.0);
            pts[i] = {x, y};  // x against the last meaningful axis (z for 3D clouds)
        }
        return pts;
    }
    return spring_layout(n, edges, seed);
}

}  // namespace

std::string render_graph_svg(const FunctionGraph& graph, std::uint64_t layout_seed) {
    const double size = 480, margin = 24;
    auto pts = fit_canvas(planar_positions(graph.n, graph.edges, graph.positions, layout_seed),
                          size, margin);
    double vmin = kBig, vmax = -kBig;
    if (graph.has_values() && graph.value_dim == 1) {
        for (int i = 0; i < graph.n; ++i) {
            vmin = std::min(vmin, graph.values[i]);
            vmax = std::max(vmax, graph.values[i]);
        }
    }
    std::string svg = svg_open(size, size);
    for (auto [a, b] : graph.edges)
        svg += "<line x1=\"" + fmt(pts[a].first) + "\" y1=\"" + fmt(pts[a].second) + "\" x2=\"" +
               fmt(pts[b].first) + "\" y2=\"" + fmt(pts[b].second) +
               "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
    for (int i = 0; i < graph.n; ++i) {
        double t = 0.5;
        if (graph.has_values() && graph.value_dim == 1 && vmax > vmin)
            t = (graph.values[i] - vmin) / (vmax - vmin);
        svg += "<circle cx=\"" + fmt(pts[i].first) + "\" cy=\"" + fmt(pts[i].second) +
               "\" r=\"4\" fill=\"" + gray_fill(t) + "\" stroke=\"#333\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_drg_svg(const DecoratedReebGraph& drg, const FunctionGraph& base,
                           std::uint64_t layout_seed) {
    const double size = 480, margin = 28;
    std::vector<std::pair<double, double>> raw(drg.class_count, {0.0, 0.0});
    std::vector<int> members(drg.class_count, 0);
    for (int v = 0; v < int(drg.class_of.size()); ++v) ++members[drg.class_of[v]];

    if (base.positions) {
        for (int v = 0; v < int(drg.class_of.size()); ++v) {
            const auto& p = (*base.positions)[v];
            double x = p.empty() ? 0.0 : p[0];
            double y = p.size() > 2 ? p[2] : (p.size() > 1 ? p[1] : 0.0);
            raw[drg.class_of[v]].first += x;
            raw[drg.class_of[v]].second += y;
        }
        for (int c = 0; c < drg.class_count; ++c) {
            raw[c].first /= members[c];
            raw[c].second /= members[c];
        }
    } else {
        raw = spring_layout(drg.class_count, drg.edges, layout_seed);
    }
    auto pts = fit_canvas(std::move(raw), size, margin);

    std::string svg = svg_open(size, size);
    for (auto [a, b] : drg.edges)
        svg += "<line x1=\"" + fmt(pts[a].first) + "\" y1=\"" + fmt(pts[a].second) + "\" x2=\"" +
               fmt(pts[b].first) + "\" y2=\"" + fmt(pts[b].second) +
               "\" stroke=\"#777\" stroke-width=\"1.5\"/>\n";
    int largest = *std::max_element(members.begin(), members.end());
    for (int c = 0; c < drg.class_count; ++c) {
        double r = 4.0 + 8.0 * std::sqrt(double(members[c]) / largest);
        svg += "<circle cx=\"" + fmt(pts[c].first) + "\" cy=\"" + fmt(pts[c].second) + "\" r=\"" +
               fmt(r) + "\" fill=\"" + gray_fill(double(c) / std::max(1, drg.class_count - 1)) +
               "\" stroke=\"#222\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_barcode_svg(const Barcode& barcode) {
    const double size = 360, margin = 32;
    double top = 1e-9;
    for (const auto& iv : barcode.intervals) top = std::max({top, iv.birth, iv.death});
    top *= 1.05;
    auto sx = [&](double v) { return margin + v / top * (size - 2 * margin); };
    auto sy = [&](double v) { return size - margin - v / top * (size - 2 * margin); };

    std::string svg = svg_open(size, size);
    svg += "<line x1=\"" + fmt(sx(0)) + "\" y1=\"" + fmt(sy(0)) + "\" x2=\"" + fmt(sx(top)) +
           "\" y2=\"" + fmt(sy(top)) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    for (const auto& iv : barcode.intervals) {
        if (iv.open) {
            double x = sx(iv.birth), y = sy(iv.death);
            svg += "<path d=\"M " + fmt(x - 4) + " " + fmt(y + 4) + " L " + fmt(x + 4) + " " +
                   fmt(y + 4) + " L " + fmt(x) + " " + fmt(y - 4) + " Z\" fill=\"#c33\"/>\n";
        } else {
            svg += "<circle cx=\"" + fmt(sx(iv.birth)) + "\" cy=\"" + fmt(sy(iv.death)) +
                   "\" r=\"3.5\" fill=\"#36c\" stroke=\"#114\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_matrix_svg(const std::vector<std::vector<double>>& matrix) {
    int n = int(matrix.size());
    if (n == 0) return svg_open(10, 10) + "</svg>\n";
    const double cell = std::max(2.0, std::min(12.0, 480.0 / n));
    double size = cell * n;
    double vmax = 1e-12;
    for (const auto& row : matrix)
        for (double v : row) vmax = std::max(vmax, v);
    std::string svg = svg_open(size, size);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < int(matrix[i].size()); ++j) {
            int level = int(std::clamp(255.0 * (1.0 - matrix[i][j] / vmax), 0.0, 255.0));
            char color[16];
            std::snprintf(color, sizeof color, "rgb(%d,%d,%d)", level, level, level);
            svg += "<rect x=\"" + fmt(j * cell) + "\" y=\"" + fmt(i * cell) + "\" width=\"" +
                   fmt(cell) + "\" height=\"" + fmt(cell) + "\" fill=\"" + std::string(color) +
                   "\"/>\n";
        }
    svg += "</svg>\n";
    return svg;
}

}  // namespace reebdeco
