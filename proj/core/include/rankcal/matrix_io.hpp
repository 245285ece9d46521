#pragma once

#include <iosfwd>
#include <string>

#include "rankcal/matrix.hpp"

namespace rankcal {

/// Matrix file format: plain-text CSV, n rows of n comma-separated decimal
/// numbers. Lines starting with '#' and blank lines are ignored. Diagonal
/// entries must parse to zero within 1e-12.
///
/// Throws ParseError on malformed text or nonzero diagonal, DimensionError
/// when the matrix is not square or has n < 3.
ComparisonMatrix parse_matrix_csv(std::istream& in);

/// File wrapper around parse_matrix_csv; ParseError if unreadable.
ComparisonMatrix load_matrix_csv(const std::string& path);

/// Renders CSV that re-parses to the identical matrix (17 significant
/// digits per entry).
std::string format_matrix_csv(const ComparisonMatrix& m);

}  // namespace rankcal
