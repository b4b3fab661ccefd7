#pragma once

#include <string>
#include <vector>

#include "reebdeco/core.hpp"
#include "reebdeco/graph_build.hpp"

namespace reebdeco {

// Graph JSON: {"n": int, "edges": [[i,j],...], "values": [[...],...] | null,
//              "metric": n*n array | null, "positions": [[...],...] | null}.
// The returned graph is fully validated (simplicity, connectivity, metric
// axioms). Malformed documents throw SchemaError.
FunctionGraph load_function_graph(const std::string& json_text);
std::string save_function_graph(const FunctionGraph& graph);

// DRG JSON: {"classes": int, "representative": [...], "class_of": [...],
//            "edges": [[i,j],...], "metric": condensed upper-triangular,
//            "decorations": [null | {"barcode": ...} | {"image": ...}, ...],
//            "params": {...}}.
// Open interval deaths serialize as {"open_at": r}. Reals round-trip exactly.
DecoratedReebGraph load_drg(const std::string& json_text);
std::string save_drg(const DecoratedReebGraph& drg);

Barcode load_barcode(const std::string& json_text);
std::string save_barcode(const Barcode& barcode);

// Point-cloud CSV: one point per row, comma-separated reals, optional header.
PointCloud load_cloud_csv(const std::string& text);
std::string save_cloud_csv(const PointCloud& cloud);

std::vector<std::vector<double>> load_matrix_csv(const std::string& text);
std::string save_matrix_csv(const std::vector<std::vector<double>>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace reebdeco
