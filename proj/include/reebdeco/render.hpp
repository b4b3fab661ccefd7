#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reebdeco/core.hpp"

namespace reebdeco {

// Nodes as circles (shaded by scalar value when present), edges as lines.
// Uses stored positions, falling back to a seeded spring layout.
std::string render_graph_svg(const FunctionGraph& graph, std::uint64_t layout_seed = 0);

// Quotient classes placed at the mean position of their members when the
// base graph carries positions; spring layout otherwise. Node area scales
// with class size.
std::string render_drg_svg(const DecoratedReebGraph& drg, const FunctionGraph& base,
                           std::uint64_t layout_seed = 0);

// Birth-death scatter with the diagonal; open bars drawn as triangles at the
// truncation scale.
std::string render_barcode_svg(const Barcode& barcode);

// Heatmap with one rect per cell.
std::string render_matrix_svg(const std::vector<std::vector<double>>& matrix);

}  // namespace reebdeco
