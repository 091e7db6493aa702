#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbound/provider.hpp"

namespace mbound {

enum class OutputFormat { Table, Csv, Json };

OutputFormat output_format_from_string(std::string_view s);

// Cell (row i, column j) holds the bound of column query j with respect
// to row query i; the diagonal holds self bounds. nullopt marks a cell
// that failed under the permissive flag.
struct MatrixResult {
    std::vector<std::string> labels;
    Count universe;
    std::vector<std::vector<std::optional<MeaningBound>>> cells;
    std::vector<std::string> cell_errors;  // diagnostics for the nullopt cells
};

// Computes the full N x N bound matrix. Without `permissive` the first
// failing cell propagates its error; with it the cell becomes nullopt and
// the diagnostic is collected.
MatrixResult compute_matrix(const CountProvider& provider, const std::vector<Query>& queries,
                            const BoundOptions& options = {}, bool permissive = false);

// Fixed-point formatting with round-half-even ties, as used for table
// cells; csv and json carry full precision instead.
std::string format_fixed(double value, int precision);

// Shortest decimal form that round-trips to the same double.
std::string format_full(double value);

std::string format_matrix_table(const MatrixResult& m, int precision);
std::string format_matrix_csv(const MatrixResult& m);
std::string format_matrix_json(const MatrixResult& m);

std::string format_bound_table(const BoundReport& r);
std::string format_bound_csv(const BoundReport& r);
std::string format_bound_json(const BoundReport& r);

}  // namespace mbound
